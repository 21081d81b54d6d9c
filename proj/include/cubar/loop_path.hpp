#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cubar/cubical.hpp"
#include "cubar/simplicial.hpp"

namespace cubar {

std::string loop_word_label(const std::vector<SimplexExpr>& letters);

/* The monoidal cubical set Omega(X) materialized through max_degree.
 * Generators are words of desuspended nondegenerate simplices; cores that
 * the face calculus reaches but normalization cannot clean (letters with a
 * non-top simplicial degeneracy) stay as extra cores, which the normalized
 * chain functor kills. */
class LoopSpace {
public:
    LoopSpace(SimplicialSet base, int max_degree);

    const SimplicialSet& base() const { return base_; }
    int max_degree() const { return max_degree_; }
    const MonoidalCubicalSet& monoidal() const { return omega_; }
    const CubicalSet& set() const { return omega_.set; }
    const std::string& unit() const { return omega_.unit; }

    const std::vector<SimplexExpr>& letters_of(const std::string& core) const;

    /* normal form of a formal word of (possibly degenerate) letters */
    CubeElt elt_from_letters(const std::vector<SimplexExpr>& letters);
    CubeElt mult(const CubeElt& a, const CubeElt& b) const { return omega_.mult(a, b); }

    FreeChainComplex chains() const { return omega_.set.normalized_chains(); }

private:
    CubeElt compute_core_face(const std::string& core, int i, int eps);
    void require_faces(const std::string& core);

    SimplicialSet base_;
    int max_degree_;
    MonoidalCubicalSet omega_;
    std::map<std::string, std::vector<SimplexExpr>> words_;
};

/* truncating twisting function tau: X -> Q given on nondegenerate
 * generators; extended to top degeneracies by eta_n tau = tau s_n. */
struct TruncatingTable {
    const MonoidalCubicalSet* target = nullptr;
    std::map<std::string, CubeElt> values;
    /* optional override used by the universal table, which can also
     * evaluate letters with non-top degeneracies */
    std::function<CubeElt(const SimplexExpr&)> eval_override;

    CubeElt eval(const SimplicialSet& x, const SimplexExpr& e) const;
};

TruncatingTable universal_tau(LoopSpace& loops);

std::vector<std::string> verify_truncating(const TruncatingTable& tau, const SimplicialSet& x,
                                           int max_dim);

/* the monoidal cubical map f_tau: Omega(X) -> Q with f(x1...xk) =
 * tau(x1)...tau(xk); result carries its own verification report */
struct InducedMap {
    std::map<std::string, CubeElt> on_cores;
    std::vector<std::string> violations; // face/degeneracy/product compatibility

    CubeElt apply(const CubicalSet& src, const CubeElt& e) const;
};

InducedMap induced_monoidal_map(LoopSpace& loops, const TruncatingTable& tau);

/* cubical left Q-module: a cubical set with an associative unital action */
struct QModule {
    const MonoidalCubicalSet* q = nullptr;
    const CubicalSet* l = nullptr;
    std::function<CubeElt(const std::string&, const std::string&)> action_cores;

    CubeElt act(const CubeElt& qe, const CubeElt& le) const;
};

std::string tcp_core_label(const SimplexExpr& base, const std::string& fiber_core);

/* twisted Cartesian product X x_tau L through max_degree */
class TwistedProduct {
public:
    TwistedProduct(const SimplicialSet& base, const TruncatingTable& tau, const QModule& module,
                   int max_degree);

    const CubicalSet& set() const { return set_; }
    FreeChainComplex chains() const { return set_.normalized_chains(); }

    /* projection xi(x,y) = x on cores */
    SimplexExpr base_of(const std::string& core) const;
    std::string fiber_of(const std::string& core) const;
    /* inclusion of the fiber over the basepoint */
    std::string include_fiber(const std::string& l_core) const;

private:
    CubeElt compute_core_face(const std::string& core, int i, int eps);
    void require_faces(const std::string& core);
    CubeElt make_elt(const SimplexExpr& base, const CubeElt& fiber);

    const SimplicialSet* base_;
    TruncatingTable tau_;
    QModule module_;
    int max_degree_;
    CubicalSet set_;
    std::map<std::string, std::pair<SimplexExpr, std::string>> parts_;
};

/* P X = X x_{tau_U} Omega X */
TwistedProduct path_functor(LoopSpace& loops);

/* the free graded monoid on one generator with trivial cubical structure;
 * the target of the constant truncating function (cubical resysolution) */
MonoidalCubicalSet free_monoid_cubical(int max_degree);
TruncatingTable constant_tau(const SimplicialSet& x, const MonoidalCubicalSet& m);

} // namespace cubar
