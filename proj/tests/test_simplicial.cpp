#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubar/simplicial.hpp"

using namespace cubar;

TEST_CASE("normalize_simplex rewriting")
{
    SimplicialSet x = standard_simplex(1); // v0, v1, v01
    // d0 s0 (v0) = v0
    CHECK(x.normalize_simplex({"d0", "s0"}, "v0") == SimplexExpr{{}, "v0"});
    // s0 s0 (v0) = s1 s0 (v0)
    SimplexExpr e = x.normalize_simplex({"s0", "s0"}, "v0");
    CHECK(e.word == std::vector<int>{1, 0});
    CHECK(e == x.apply_s(1, x.apply_s(0, SimplexExpr{{}, "v0"})));
    // d2 s0 (σ¹) = s0 d1 (σ¹)
    SimplexExpr lhs = x.normalize_simplex({"d2", "s0"}, "v01");
    SimplexExpr rhs = x.apply_s(0, x.apply_face(1, SimplexExpr{{}, "v01"}));
    CHECK(lhs == rhs);
    CHECK_THROWS(x.normalize_simplex({"d3"}, "v01"));
    CHECK(parse_simplex_expr(e.str()) == e);
}

TEST_CASE("minimal spheres and normalized chains")
{
    SimplicialSet s2 = minimal_sphere(2);
    CHECK(s2.reduced_level() == 1);
    CHECK(s2.verify_identities().empty());
    FreeChainComplex c = s2.normalized_chains();
    CHECK(c.dim(0) == 1);
    CHECK(c.dim(1) == 0);
    CHECK(c.dim(2) == 1);
    CHECK(chain_is_zero(c.boundary(2, "sigma")));
    CHECK(c.homology(2, CoefficientRing::integers()).betti == 1);

    SimplicialSet s3 = minimal_sphere(3);
    CHECK(s3.reduced_level() == 2);
    FreeChainComplex c3 = s3.normalized_chains();
    CHECK(c3.dim(3) == 1);
    CHECK(chain_is_zero(c3.boundary(3, "sigma")));
}

TEST_CASE("standard simplex chains")
{
    SimplicialSet d2 = standard_simplex(2);
    FreeChainComplex c = d2.normalized_chains();
    CHECK(c.dim(0) == 3);
    CHECK(c.dim(1) == 3);
    CHECK(c.dim(2) == 1);
    CHECK(c.verify_d_squared().empty());
    CHECK(c.homology(0, CoefficientRing::integers()).betti == 1);
    CHECK(c.homology(1, CoefficientRing::integers()).betti == 0);
}

TEST_CASE("aw components")
{
    SimplicialSet d2 = standard_simplex(2);
    SimplexExpr s{{}, "v012"};
    auto [f0, b0] = d2.aw_components(s, 0);
    CHECK(f0 == SimplexExpr{{}, "v0"});
    CHECK(b0 == s);
    auto [f1, b1] = d2.aw_components(s, 1);
    CHECK(f1 == SimplexExpr{{}, "v01"});
    CHECK(b1 == SimplexExpr{{}, "v12"});
    CHECK(d2.aw_diagonal("v012").size() == 3);
    CHECK_THROWS(d2.aw_components(s, 5));
}

TEST_CASE("aw diagonal is coassociative, counital and a chain map")
{
    for (int n : {2, 3}) {
        SimplicialSet x = standard_simplex(n);
        FreeChainComplex c = x.normalized_chains();
        for (int d = 0; d <= n; ++d)
            for (const auto& g : x.generators(d)) {
                // chain map: Δd = (d⊗id + id⊗d)Δ — computed over all components
                ChainExpr lhs, rhs;
                for (const auto& [t, v] : c.boundary(d, g))
                    chain_add(lhs, x.aw_diagonal(t), v);
                for (int i = 0; i <= d; ++i) {
                    auto [front, back] = x.aw_components(SimplexExpr{{}, g}, i);
                    if (front.degenerate() || back.degenerate())
                        continue;
                    for (const auto& [t, v] : c.boundary(i, front.gen))
                        chain_add(rhs, tensor_label(t, back.gen), v);
                    int64_t sign = (i % 2 == 0) ? 1 : -1;
                    for (const auto& [t, v] : c.boundary(d - i, back.gen))
                        chain_add(rhs, tensor_label(front.gen, t), sign * v);
                }
                CHECK(lhs == rhs);

                // coassociativity, flattened to triples: (Δ⊗id)Δ = (id⊗Δ)Δ
                std::map<std::string, int64_t> l3, r3;
                for (const auto& [t, v] : x.aw_diagonal(g)) {
                    auto [a, b] = split_tensor_label(t);
                    for (const auto& [u, w] : x.aw_diagonal(a)) {
                        auto [u1, u2] = split_tensor_label(u);
                        l3[u1 + "," + u2 + "," + b] += v * w;
                    }
                    for (const auto& [u, w] : x.aw_diagonal(b)) {
                        auto [u1, u2] = split_tensor_label(u);
                        r3[a + "," + u1 + "," + u2] += v * w;
                    }
                }
                std::erase_if(l3, [](const auto& kv) { return kv.second == 0; });
                std::erase_if(r3, [](const auto& kv) { return kv.second == 0; });
                CHECK(l3 == r3);

                // counit: degree-0 left components sum to g, same on the right
                ChainExpr eps_left, eps_right;
                for (const auto& [t, v] : x.aw_diagonal(g)) {
                    auto [a, b] = split_tensor_label(t);
                    if (c.has_label(0, a))
                        chain_add(eps_left, b, v);
                    if (c.has_label(0, b))
                        chain_add(eps_right, a, v);
                }
                CHECK(eps_left == ChainExpr{{g, 1}});
                CHECK(eps_right == ChainExpr{{g, 1}});
            }
    }
}

TEST_CASE("suspension builders")
{
    // two points (one besides the basepoint) -> circle
    SimplicialSet two;
    two.add_generator("*", 0);
    two.add_generator("p", 0);
    two.set_basepoint("*");
    SimplicialSet circ = suspension(two);
    FreeChainComplex cc = circ.normalized_chains();
    CHECK(cc.homology(1, CoefficientRing::integers()).betti == 1);

    // suspension of the minimal S^1 = S^2 model
    SimplicialSet s1 = minimal_sphere(1);
    SimplicialSet s2 = suspension(s1);
    CHECK(s2.is_one_reduced());
    FreeChainComplex c2 = s2.normalized_chains();
    CHECK(c2.homology(2, CoefficientRing::integers()).betti == 1);
    CHECK(c2.homology(1, CoefficientRing::integers()).betti == 0);

    // suspension of S^2 = S^3 model, AW components vanish in the middle
    SimplicialSet s3 = suspension(minimal_sphere(2));
    CHECK(s3.reduced_level() >= 1);
    for (int d = 2; d <= s3.top_dim(); ++d)
        for (const auto& g : s3.generators(d))
            for (int i = 1; i < d; ++i) {
                auto [front, back] = s3.aw_components(SimplexExpr{{}, g}, i);
                CHECK((front.degenerate() || back.degenerate()));
            }

    CHECK_THROWS(suspension(SimplicialSet{}));
}

TEST_CASE("wedge of two spheres")
{
    SimplicialSet w = wedge_of_spheres({{"a", 2}, {"b", 2}});
    FreeChainComplex c = w.normalized_chains();
    CHECK(c.dim(2) == 2);
    CHECK(c.homology(2, CoefficientRing::integers()).betti == 2);
}

TEST_CASE("json round trip")
{
    SimplicialSet s2 = minimal_sphere(2);
    std::string j = s2.to_json();
    SimplicialSet back = SimplicialSet::from_json(j);
    CHECK(back.gen_dim("sigma") == 2);
    CHECK(back.basepoint() == "*");
    CHECK(back.apply_face(0, SimplexExpr{{}, "sigma"}) == back.basepoint_expr(1));
}
