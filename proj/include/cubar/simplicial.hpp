#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cubar/chain.hpp"

namespace cubar {

/* Normal form s_{w[0]} s_{w[1]} ... s_{w[k-1]} (gen) with w strictly
 * decreasing (outermost first). Empty word = nondegenerate. */
struct SimplexExpr {
    std::vector<int> word;
    std::string gen;

    bool degenerate() const { return !word.empty(); }
    bool operator==(const SimplexExpr& o) const = default;
    bool operator<(const SimplexExpr& o) const
    {
        return std::tie(word, gen) < std::tie(o.word, o.gen);
    }
    std::string str() const;
};

SimplexExpr parse_simplex_expr(const std::string& s);

class SimplicialSet {
public:
    void add_generator(const std::string& name, int dim);
    void set_face(const std::string& gen, int i, SimplexExpr value);
    void set_basepoint(const std::string& name);

    bool has_generator(const std::string& name) const { return dims_.count(name) > 0; }
    int gen_dim(const std::string& name) const;
    int top_dim() const;
    const std::vector<std::string>& generators(int dim) const;
    const std::string& basepoint() const { return basepoint_; }

    int dim_of(const SimplexExpr& e) const { return static_cast<int>(e.word.size()) + gen_dim(e.gen); }

    /* basepoint-degenerate expression of the given dimension */
    SimplexExpr basepoint_expr(int dim) const;
    bool is_basepoint_expr(const SimplexExpr& e) const { return e.gen == basepoint_; }

    SimplexExpr apply_s(int i, SimplexExpr e) const;
    SimplexExpr apply_face(int i, SimplexExpr e) const;
    /* op_word applied left-to-right as written, e.g. {"d0","s1"} = ∂_0 s_1 */
    SimplexExpr normalize_simplex(const std::vector<std::string>& op_word, const std::string& gen) const;

    /* front i-face and back (n-i)-face: the AW-diagonal components. */
    std::pair<SimplexExpr, SimplexExpr> aw_components(const SimplexExpr& e, int i) const;
    SimplexExpr front_face(const SimplexExpr& e, int lo_dim) const; // spans vertices 0..lo_dim
    SimplexExpr back_face(const SimplexExpr& e, int hi_dim) const;  // spans last hi_dim+1 vertices
    SimplexExpr vertex_face(const SimplexExpr& e, const std::vector<int>& keep) const;

    /* ∂_i∂_j = ∂_{j-1}∂_i on all generators; returns violating descriptions. */
    std::vector<std::string> verify_identities() const;
    void validate_or_throw() const;

    /* largest n with X_0 = ... = X_n = {*}; requires a basepoint */
    int reduced_level() const;
    bool is_one_reduced() const { return reduced_level() >= 1; }

    FreeChainComplex normalized_chains() const;

    /* full AW diagonal of a nondegenerate generator, in C(X) (x) C(X);
     * degenerate components dropped */
    ChainExpr aw_diagonal(const std::string& gen) const;

    std::string to_json() const;
    static SimplicialSet from_json(const std::string& text);

private:
    std::map<std::string, int> dims_;
    std::map<int, std::vector<std::string>> by_dim_;
    std::map<std::pair<std::string, int>, SimplexExpr> faces_;
    std::string basepoint_;
};

SimplicialSet standard_simplex(int n);
SimplicialSet minimal_sphere(int n);
SimplicialSet wedge_of_spheres(const std::vector<std::pair<std::string, int>>& cells);
/* reduced suspension of a pointed simplicial set */
SimplicialSet suspension(const SimplicialSet& k);

} // namespace cubar
