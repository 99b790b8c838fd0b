#include "gtable/gallery.hpp"
#include "gtable/supercochain.hpp"

#include <doctest.h>

using namespace gtable;
using namespace gtable::cochain;

namespace {

// Heisenberg indices: primal x_1, x_{-1}, h_0 are 0, 1, 2; the dual x^{-1}, x^1, h^0 likewise.
constexpr int xm1 = 0, x1 = 1, h0 = 2;  // duals
constexpr int y1 = 0, ym1 = 1, k0 = 2;  // primals

BigradedElement mono(std::vector<int> duals, std::vector<int> primals, const Scalar& c = 1) {
    return BigradedElement::monomial(duals, primals, c);
}

}  // namespace

TEST_CASE("vee") {
    const auto ctx = gallery::heisenberg_context();
    CHECK(vee(mono({x1, h0}, {}), mono({}, {y1, k0})) == mono({x1, h0}, {y1, k0}));
    auto c = mono({x1}, {ym1}) + mono({h0, xm1}, {k0}, 3);
    CHECK(vee(BigradedElement::one(), c) == c);
    // The Koszul sign from moving x_1 past x^{-1}.
    CHECK(vee(mono({x1}, {y1}), mono({xm1}, {ym1})) == -mono({x1, xm1}, {y1, ym1}));
    CHECK(render(vee(mono({x1}, {y1}), mono({xm1}, {ym1})), &ctx) == "x^{-1}x^{1}⊗x_1x_{-1}");
}

TEST_CASE("bracket on generators and small products") {
    CHECK(bracket(mono({h0}, {}), mono({}, {k0})) == BigradedElement::one());
    CHECK(bracket(mono({x1}, {}), mono({}, {y1})).is_zero());
    CHECK(bracket(mono({x1}, {}), mono({}, {ym1})) == BigradedElement::one());
    CHECK(bracket(mono({x1}, {}), mono({xm1, h0}, {})).is_zero());
    CHECK(bracket(mono({}, {y1}), mono({}, {k0})).is_zero());
    CHECK(bracket(mono({x1}, {ym1}), mono({x1, h0}, {})) == mono({x1, h0}, {}));
}

TEST_CASE("differential of the Heisenberg complex") {
    const auto ctx = gallery::heisenberg_context();
    CHECK(differential(mono({h0}, {y1, ym1}), ctx) ==
          mono({xm1, x1}, {y1, ym1}) - mono({xm1, h0}, {y1, k0}) - mono({x1, h0}, {ym1, k0}));
    CHECK(differential(BigradedElement::one(), ctx).is_zero());
    CHECK(differential(mono({x1}, {}), ctx).is_zero());
    CHECK(differential(mono({h0}, {}), ctx) == -mono({x1, xm1}, {}));
}

TEST_CASE("differential of 1-forms against the structure constants") {
    // On a 1-form xi the differential is the pullback xi([e_i, e_j]) on e^i e^j, i < j, which
    // is the classical Chevalley-Eilenberg value with the opposite sign.
    const auto ctx = gallery::heisenberg_context();
    auto br = gallery::heisenberg_lie_bracket();
    for (int xi = 0; xi < 3; ++xi) {
        BigradedElement expected;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                Scalar c = br.at(std::size_t(xi), std::size_t(i), std::size_t(j));
                if (c != 0) expected += mono({i, j}, {}, c);
            }
        CHECK(differential(mono({xi}, {}), ctx) == expected);
    }
}

TEST_CASE("sl2 action on cochains") {
    const auto ctx = gallery::heisenberg_context();
    CHECK(sl2_act(2, mono({x1}, {y1}), ctx) == mono({x1}, {ym1}) - mono({xm1}, {y1}));
    CHECK(sl2_act(1, BigradedElement::one(), ctx).is_zero());
    auto f1 = sl2_act(2, mono({x1, h0}, {}), ctx);
    CHECK(f1 == -mono({xm1, h0}, {}));
    CHECK(sl2_act(2, f1, ctx).is_zero());
    CHECK(sl2_act(0, mono({xm1}, {}), ctx) == -mono({x1}, {}));
}

TEST_CASE("Heisenberg cohomology") {
    const auto ctx = gallery::heisenberg_context();
    auto h00 = cohomology(ctx, 0, 0);
    REQUIRE(h00.dim() == 1);
    CHECK(h00.reps[0] == BigradedElement::one());
    CHECK(cohomology(ctx, 1, 1).dim() == 4);
    std::size_t even = 0;
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
            if ((p + q) % 2 == 0) even += cohomology(ctx, p, q).dim();
    CHECK(even == 18);
}

TEST_CASE("class coordinates") {
    const auto ctx = gallery::heisenberg_context();
    auto h = cohomology(ctx, 1, 1);
    auto c0 = class_coords(h.reps[0], h, ctx);
    CHECK(c0 == Vector{1, 0, 0, 0});
    auto dw = differential(mono({}, {y1}) + mono({}, {k0}, 2), ctx);
    REQUIRE_FALSE(dw.is_zero());
    CHECK(class_coords(dw, h, ctx) == Vector{0, 0, 0, 0});
    CHECK(class_coords(h.reps[0] + dw, h, ctx) == c0);
    CHECK_THROWS_AS(class_coords(mono({h0}, {}), cohomology(ctx, 1, 0), ctx), NotACocycle);
}

TEST_CASE("the Heisenberg structure is closed under its own bracket") {
    const auto ctx = gallery::heisenberg_context();
    CHECK(bracket(ctx.mu, ctx.mu).is_zero());
    CHECK_NOTHROW(ctx.validate());
}

TEST_CASE("a non-Lie bracket is rejected") {
    // [e0, e1] = e0 + e2, [e1, e2] = e1 violates Jacobi.
    std::vector<std::vector<Vector>> s(3, std::vector<Vector>(3, la::zero_vector(3)));
    s[0][1] = {1, 0, 1};
    s[1][0] = {-1, 0, -1};
    s[1][2] = {0, 1, 0};
    s[2][1] = {0, -1, 0};
    s[0][2] = {0, 0, 0};
    auto ctx = ComplexContext::from_lie_bracket(3, s);
    CHECK_THROWS_AS(ctx.validate(), InvalidContext);
}
