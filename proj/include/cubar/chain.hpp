#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubar/ring.hpp"
#include "cubar/snf.hpp"
#include "cubar/sparse.hpp"

namespace cubar {

/* Formal integer combination of basis labels. */
using ChainExpr = std::map<std::string, int64_t>;

void chain_add(ChainExpr& dst, const std::string& label, int64_t coeff);
void chain_add(ChainExpr& dst, const ChainExpr& src, int64_t scale = 1);
ChainExpr chain_scale(const ChainExpr& c, int64_t s);
bool chain_is_zero(const ChainExpr& c);
ChainExpr chain_reduce(const ChainExpr& c, const CoefficientRing& ring);
std::string chain_to_string(const ChainExpr& c);

struct HomologySummary {
    int degree = 0;
    int betti = 0;
    std::vector<BigInt> torsion; // invariant factors > 1, divisibility chain
};

/* Free complex of finitely generated modules indexed by an integer degree.
 * direction = -1: homological (d: n -> n-1); +1: cochain complexes. */
class FreeChainComplex {
public:
    FreeChainComplex() = default;
    explicit FreeChainComplex(int direction) : direction_(direction) {}

    int direction() const { return direction_; }
    int min_degree() const;
    int max_degree() const;
    bool has_degree(int n) const { return bases_.count(n) > 0; }

    /* Bases are sorted lexicographically once, at insertion. */
    void set_basis(int degree, std::vector<std::string> labels);
    const std::vector<std::string>& basis(int degree) const;
    int dim(int degree) const;
    int index_of(int degree, const std::string& label) const;
    bool has_label(int degree, const std::string& label) const;

    /* d(label) += coeff * target; target lives in degree + direction. */
    void add_boundary(int degree, const std::string& label,
                      const std::string& target, int64_t coeff);
    void set_boundary(int degree, const std::string& label, ChainExpr value);
    const ChainExpr& boundary(int degree, const std::string& label) const;
    ChainExpr boundary_of(int degree, const ChainExpr& c) const;

    /* Matrix of d: degree -> degree+direction; rows = target basis,
     * cols = source basis. */
    SparseMatInt boundary_matrix(int degree) const;

    std::vector<std::pair<int, std::string>> verify_d_squared() const;

    HomologySummary homology(int degree, const CoefficientRing& ring) const;
    std::vector<HomologySummary> homology_range(int lo, int hi,
                                                const CoefficientRing& ring) const;

    void check_degrees_or_throw() const; // labels referenced by boundaries exist

    /* text exchange format: lines "degree row col value" for each d_n entry */
    std::string to_matrix_text() const;

private:
    int direction_ = -1;
    std::map<int, std::vector<std::string>> bases_;
    std::map<int, std::map<std::string, int>> index_;
    std::map<int, std::map<std::string, ChainExpr>> boundaries_;
    static const ChainExpr empty_chain_;
};

struct BoundaryEntry {
    int degree;
    std::string source;
    std::string target;
    int64_t coeff;
};

/* Does not validate d^2 = 0 (see verify_d_squared); does validate labels. */
FreeChainComplex build_complex(int direction,
                               const std::map<int, std::vector<std::string>>& bases,
                               const std::vector<BoundaryEntry>& entries);

std::string tensor_label(const std::string& a, const std::string& b);
std::pair<std::string, std::string> split_tensor_label(const std::string& l);

/* Tensor product with Koszul signs: d(a (x) b) = da (x) b + (-1)^{|a|} a (x) db.
 * Both factors must share the same direction. */
FreeChainComplex tensor_complex(const FreeChainComplex& a, const FreeChainComplex& b);

/* Degree-wise dual through max_degree: dual basis labels are unchanged,
 * differentials are plain transposes running in the opposite direction. */
FreeChainComplex dualize(const FreeChainComplex& c, int max_degree);

} // namespace cubar
