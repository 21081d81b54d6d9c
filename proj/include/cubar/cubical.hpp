#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cubar/chain.hpp"

namespace cubar {

/* An element of a cubical set whose degeneracies are free: a core element
 * plus counts of formal degeneracy coordinates in each of the core_deg+1
 * gaps (before/between/after the core's cube coordinates). gaps has size
 * core_deg + 1. The pair (core, gaps) is a normal form. */
struct CubeElt {
    std::string core;
    std::vector<int> gaps;

    static CubeElt clean(const std::string& core, int core_deg)
    {
        return {core, std::vector<int>(core_deg + 1, 0)};
    }
    int core_degree() const { return static_cast<int>(gaps.size()) - 1; }
    int dummy_count() const;
    int degree() const { return core_degree() + dummy_count(); }
    bool is_clean() const { return dummy_count() == 0; }
    bool operator==(const CubeElt& o) const = default;
    std::string str() const;

    /* normalized degeneracy word eta_{i_k}...eta_{i_1}, innermost first
     * ascending (the paper's normal form) */
    std::vector<int> eta_word() const;
};

/* Cubical set with freely generated degeneracies. "Cores" are the
 * degeneracy-free elements; the subset flagged as generators forms the
 * basis of the normalized chains, the rest ("extra" cores) are elements
 * that the quotient kills but the face calculus still reaches. */
class CubicalSet {
public:
    void add_core(const std::string& name, int degree, bool generator);
    bool has_core(const std::string& name) const { return degrees_.count(name) > 0; }
    bool is_generator(const std::string& name) const { return generators_.count(name) > 0; }
    int core_degree(const std::string& name) const;
    int top_degree() const;
    const std::vector<std::string>& generators(int degree) const;
    std::vector<std::string> all_cores() const;

    void set_face(const std::string& core, int i, int eps, CubeElt value);
    bool has_face(const std::string& core, int i, int eps) const;
    const CubeElt& core_face(const std::string& core, int i, int eps) const;

    CubeElt clean_elt(const std::string& core) const { return CubeElt::clean(core, core_degree(core)); }

    /* face/degeneracy on arbitrary elements, via the free-degeneracy calculus */
    CubeElt face(const CubeElt& e, int i, int eps) const;
    CubeElt eta(const CubeElt& e, int i) const;

    std::vector<std::string> verify_identities() const;
    void validate_or_throw() const;

    FreeChainComplex normalized_chains() const;

    /* Serre diagonal of a generator as a chain in C (x) C; terms whose
     * factor is degenerate or a non-generator core are dropped. */
    ChainExpr serre_diagonal(const std::string& gen) const;
    /* with explicit факtor degrees: list of (left, right, left_deg, coeff) */
    struct DiagonalTerm {
        std::string left, right;
        int left_degree;
        int64_t coeff;
    };
    std::vector<DiagonalTerm> serre_diagonal_terms(const std::string& gen) const;

    std::string to_json() const;

private:
    std::map<std::string, int> degrees_;
    std::set<std::string> generators_;
    std::map<int, std::vector<std::string>> gens_by_degree_;
    std::map<std::string, std::vector<CubeElt>> faces_; // [2*(i-1)+eps]
};

std::string pair_core_label(const std::string& a, const std::string& b);
std::pair<std::string, std::string> split_pair_core_label(const std::string& l);

CubicalSet standard_cube(int n);
CubicalSet cubical_product(const CubicalSet& a, const CubicalSet& b);

/* monoidal structure on top of a cubical set */
struct MonoidalCubicalSet {
    CubicalSet set;
    std::string unit; // degree-0 generator
    /* product of two cores (cubical map; callers push degeneracies through) */
    std::function<CubeElt(const std::string&, const std::string&)> mult_cores;

    CubeElt mult(const CubeElt& a, const CubeElt& b) const;
    std::vector<std::string> verify_monoidal(int max_degree) const;
};

/* Block-word combinatorics of the faces of I^{n+1} (Props. cubi/cubi2).
 * Blocks of increasing integers; consecutive blocks share their junction.
 * open_first = the first block has no opening bracket. */
struct BlockWord {
    std::vector<std::vector<int>> blocks;
    bool open_first = false;

    int dimension() const; // as a face of the cube
    bool valid() const;
    bool operator==(const BlockWord& o) const = default;
    std::string str() const;

    static BlockWord top(int n_plus_1, bool open_first); // single block 0..n+1
};

BlockWord block_face(const BlockWord& b, int i, int eps);
std::vector<int> psi_projection(const BlockWord& b); // vertex set of the first block

std::string block_word_to_json(const BlockWord& b);
BlockWord block_word_from_json(const std::string& text);

} // namespace cubar
