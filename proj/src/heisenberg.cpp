#include "gtable/gallery.hpp"

#include <array>

namespace gtable::gallery {

using cochain::ComplexContext;

namespace {

Scalar q(long n, long d = 1) { return la::ratio(n, d); }

std::array<Matrix, 3> heisenberg_sl2() {
    Matrix E(3, 3), H(3, 3), F(3, 3);
    E(0, 1) = 1;
    H(0, 0) = 1;
    H(1, 1) = -1;
    F(1, 0) = 1;
    return {E, H, F};
}

const std::vector<std::string>& summand_ids() {
    static const std::vector<std::string> ids = {
        "H_0^{0,0}", "H_0^{1,1}", "H_2^{1,1}", "H_1^{2,0}", "H_1^{0,2}",
        "H_0^{2,2}", "H_2^{2,2}", "H_1^{3,1}", "H_1^{1,3}", "H_0^{3,3}"};
    return ids;
}

using Term = std::tuple<int, Scalar>;

// Cells keyed by summand indices in representative order.
GTable indexed_fixture(const std::vector<std::tuple<int, int, std::vector<Term>>>& cells) {
    auto reg = rep::sl2_first_labeling();
    std::vector<SummandInfo> infos;
    for (const auto& row : representatives())
        infos.push_back({row.id, rep::IrrepId{rep::Group::sl2(), row.weight}, row.weight});
    std::vector<CellLiteral> lits;
    for (const auto& [r1, r2, terms] : cells) {
        CellLiteral c{summand_ids()[r1], summand_ids()[r2], {}};
        for (const auto& [s, coeff] : terms) c.terms.emplace_back(summand_ids()[s], 1, coeff);
        lits.push_back(std::move(c));
    }
    return table_from_literals(reg, infos, lits);
}

}  // namespace

ComplexContext heisenberg_context() {
    std::vector<std::vector<Vector>> structure(3, std::vector<Vector>(3, la::zero_vector(3)));
    structure[0][1] = la::unit_vector(3, 2);
    structure[1][0] = la::scale(-1, la::unit_vector(3, 2));
    auto ctx = ComplexContext::from_lie_bracket(3, structure, {"x_1", "x_{-1}", "h_0"},
                                                {"x^{-1}", "x^{1}", "h^{0}"});
    ctx.sl2 = heisenberg_sl2();
    ctx.validate();
    return ctx;
}

rep::GModule heisenberg_module() {
    auto ops = heisenberg_sl2();
    return {rep::Group::sl2(), 3, {ops[0], ops[1], ops[2]}, {"x_1", "x_{-1}", "h_0"}};
}

rep::Bilinear heisenberg_lie_bracket() {
    rep::Bilinear b(3, 3, 3);
    b.at(2, 0, 1) = 1;
    b.at(2, 1, 0) = -1;
    return b;
}

rep::Decomposition heisenberg_decomposition(const rep::Registry& reg) {
    return rep::decompose_sl2(heisenberg_module(), reg,
                              std::vector<rep::HwvChoice>{{"h_0", la::unit_vector(3, 2)},
                                                          {"h_1", la::unit_vector(3, 0)}});
}

GTable heisenberg_lie_table() {
    auto reg = rep::sl2_first_labeling();
    return extract(heisenberg_module(), heisenberg_lie_bracket(), heisenberg_decomposition(reg), reg);
}

GTable heisenberg_lie_fixture() {
    auto reg = rep::sl2_first_labeling();
    const rep::Group g = rep::Group::sl2();
    return table_from_literals(reg, {{"h_0", {g, 0}, 0}, {"h_1", {g, 1}, 1}}, {{"h_1", "h_1", {{"h_0", 1, 1}}}});
}

const std::vector<RepresentativeRow>& representatives() {
    static const std::vector<RepresentativeRow> rows = [] {
        using E = BigradedElement;
        const auto& id = summand_ids();
        return std::vector<RepresentativeRow>{
            {id[0], 0, 0, 0, E::one()},
            {id[1], 1, 1, 0, E::monomial({1}, {1}) + E::monomial({0}, {0}) + E::monomial({2}, {2}, 2)},
            {id[2], 1, 1, 2, E::monomial({1}, {0})},
            {id[3], 2, 0, 1, E::monomial({1, 2}, {})},
            {id[4], 0, 2, 1, E::monomial({}, {0, 2})},
            {id[5], 2, 2, 0, E::monomial({0, 1}, {0, 1})},
            {id[6], 2, 2, 2, E::monomial({1, 2}, {0, 2})},
            {id[7], 3, 1, 1, E::monomial({0, 1, 2}, {0})},
            {id[8], 1, 3, 1, E::monomial({1}, {0, 1, 2})},
            {id[9], 3, 3, 0, E::monomial({0, 1, 2}, {0, 1, 2})},
        };
    }();
    return rows;
}

const std::vector<std::pair<int, int>>& even_bidegrees() {
    static const std::vector<std::pair<int, int>> b = {{0, 0}, {1, 1}, {2, 0}, {0, 2},
                                                       {2, 2}, {3, 1}, {1, 3}, {3, 3}};
    return b;
}

std::vector<RepresentativeCheck> check_representatives(const ComplexContext& ctx) {
    std::vector<RepresentativeCheck> out;
    for (const auto& row : representatives()) {
        RepresentativeCheck c{row.id};
        auto h = cochain::cohomology(ctx, row.p, row.q);
        Vector v = cochain::to_vector(row.rep, ctx.n, row.p, row.q);
        c.cocycle = cochain::differential(row.rep, ctx).is_zero();
        c.non_exact = !h.boundaries.contains(v);
        c.e_annihilated = cochain::sl2_act(0, row.rep, ctx).is_zero();
        c.weight_ok = cochain::sl2_act(1, row.rep, ctx) == Scalar(row.weight) * row.rep;
        out.push_back(c);
    }
    return out;
}

Vector HeisenbergAlgebra::coords(const BigradedElement& cocycle) const {
    Vector out(basis.size());
    std::map<std::pair<int, int>, BigradedElement> parts;
    for (const auto& [m, c] : cocycle.terms()) parts[{m.p(), m.q()}].add_term(m, c);
    std::size_t offset = 0;
    for (const auto& bd : even_bidegrees()) {
        const auto& h = cohomology.at(bd);
        if (auto it = parts.find(bd); it != parts.end()) {
            Vector c = cochain::class_coords(it->second, h, ctx);
            std::copy(c.begin(), c.end(), out.begin() + offset);
            parts.erase(it);
        }
        offset += h.dim();
    }
    for (const auto& [bd, part] : parts) {
        auto h = cochain::cohomology(ctx, bd.first, bd.second);
        if (!h.cocycles.contains(cochain::to_vector(part, ctx.n, bd.first, bd.second)))
            throw NotACocycle(cochain::render(part, &ctx));
        if (!h.boundaries.contains(cochain::to_vector(part, ctx.n, bd.first, bd.second)))
            throw InvalidContext("class in an odd bidegree: " + cochain::render(part, &ctx));
    }
    return out;
}

HeisenbergAlgebra heisenberg_algebra() {
    HeisenbergAlgebra a;
    a.ctx = heisenberg_context();

    // The basis of each bidegree: F^j applied to the representatives, in the summand order.
    std::vector<std::pair<std::string, std::size_t>> hwv_positions;
    for (const auto& bd : even_bidegrees()) {
        std::vector<BigradedElement> reps;
        for (const auto& row : representatives()) {
            if (std::make_pair(row.p, row.q) != bd) continue;
            hwv_positions.emplace_back(row.id, a.basis.size() + reps.size());
            BigradedElement v = row.rep;
            for (int j = 0; j <= row.weight; ++j) {
                reps.push_back(v);
                v = cochain::sl2_act(2, v, a.ctx);
            }
        }
        for (const auto& r : reps) {
            a.basis.push_back(r);
            a.basis_bidegree.push_back(bd);
        }
        a.cohomology.emplace(bd, cochain::cohomology_with(a.ctx, bd.first, bd.second, reps));
    }
    const std::size_t n = a.basis.size();
    // Summands in representative order.
    std::vector<rep::HwvChoice> choices;
    for (const auto& row : representatives())
        for (const auto& [id, pos] : hwv_positions)
            if (id == row.id) choices.push_back({id, la::unit_vector(n, pos)});

    a.module.group = rep::Group::sl2();
    a.module.dim = n;
    for (int X = 0; X < 3; ++X) {
        std::vector<Vector> cols;
        for (const auto& b : a.basis) cols.push_back(a.coords(cochain::sl2_act(X, b, a.ctx)));
        a.module.ops.push_back(Matrix::from_columns(cols, n));
    }
    for (const auto& b : a.basis) a.module.basis_names.push_back(cochain::render(b, &a.ctx));
    a.module.validate();

    a.cup = rep::Bilinear(n, n, n);
    a.bracket = rep::Bilinear(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a.cup.set_on_basis(i, j, a.coords(cochain::vee(a.basis[i], a.basis[j])));
            a.bracket.set_on_basis(i, j, a.coords(cochain::bracket(a.basis[i], a.basis[j])));
        }

    auto reg = rep::sl2_first_labeling();
    a.dec = rep::decompose_sl2(a.module, reg, choices);
    return a;
}

HeisenbergReport heisenberg_compute() {
    HeisenbergReport r;
    r.algebra = heisenberg_algebra();
    for (const auto& [bd, h] : r.algebra.cohomology) {
        r.dims[bd] = h.dim();
        r.total_dim += h.dim();
    }
    r.checks = check_representatives(r.algebra.ctx);
    auto reg = rep::sl2_first_labeling();
    r.cup = extract(r.algebra.module, r.algebra.cup, r.algebra.dec, reg);
    r.bracket = extract(r.algebra.module, r.algebra.bracket, r.algebra.dec, reg);
    return r;
}

AlgebraSpec heisenberg_bracket_spec() {
    const auto a = heisenberg_algebra();
    const auto reg = rep::sl2_first_labeling();
    AlgebraSpec spec;
    spec.group = rep::Group::sl2();
    spec.labeling = reg.name();
    spec.module = a.module;
    spec.product = a.bracket;
    for (const auto& s : a.dec.summands)
        spec.summands.push_back({s.id, s.tau * reg.model(s.irrep).hwv, std::nullopt, std::nullopt});
    return spec;
}

HeisenbergReport heisenberg_pipeline() {
    HeisenbergReport r = heisenberg_compute();
    for (const auto& c : r.checks)
        if (!c.ok()) throw FixtureMismatch("representative " + c.id + " fails its checks");
    require_match("cup product table", r.cup, cup_fixture());
    require_match("bracket table", r.bracket, bracket_fixture());
    return r;
}

GTable cup_fixture() {
    std::vector<std::tuple<int, int, std::vector<Term>>> cells;
    for (int c = 0; c < 10; ++c) cells.push_back({0, c, {{c, q(1)}}});
    const std::vector<std::tuple<int, int, std::vector<Term>>> rest = {
        {1, 0, {{1, q(1)}}},
        {1, 1, {{5, q(-6)}}},
        {1, 2, {{6, q(-2)}}},
        {1, 3, {{7, q(1)}}},
        {1, 4, {{8, q(-1)}}},
        {1, 5, {{9, q(2)}}},
        {2, 0, {{2, q(1)}}},
        {2, 1, {{6, q(-2)}}},
        {2, 2, {{5, q(1)}}},
        {2, 3, {{7, q(1)}}},
        {2, 4, {{8, q(1)}}},
        {2, 6, {{9, q(-1)}}},
        {3, 0, {{3, q(1)}}},
        {3, 1, {{7, q(1)}}},
        {3, 2, {{7, q(1)}}},
        {3, 4, {{5, q(1, 2)}, {6, q(-1, 2)}}},
        {3, 8, {{9, q(-1)}}},
        {4, 0, {{4, q(1)}}},
        {4, 1, {{8, q(-1)}}},
        {4, 2, {{8, q(1)}}},
        {4, 3, {{5, q(-1, 2)}, {6, q(-1, 2)}}},
        {4, 7, {{9, q(-1)}}},
        {5, 0, {{5, q(1)}}},
        {5, 1, {{9, q(2)}}},
        {6, 0, {{6, q(1)}}},
        {6, 2, {{9, q(-1)}}},
        {7, 0, {{7, q(1)}}},
        {7, 4, {{9, q(1)}}},
        {8, 0, {{8, q(1)}}},
        {8, 3, {{9, q(1)}}},
        {9, 0, {{9, q(1)}}},
    };
    cells.insert(cells.end(), rest.begin(), rest.end());
    return indexed_fixture(cells);
}

GTable bracket_fixture() {
    return indexed_fixture({
        {1, 3, {{3, q(3)}}},
        {1, 4, {{4, q(-3)}}},
        {1, 7, {{7, q(3)}}},
        {1, 8, {{8, q(-3)}}},
        {2, 2, {{2, q(-1)}}},
        {2, 3, {{3, q(-1)}}},
        {2, 4, {{4, q(-1)}}},
        {2, 6, {{6, q(-1)}}},
        {2, 7, {{7, q(-1)}}},
        {2, 8, {{8, q(-1)}}},
        {3, 1, {{3, q(-3)}}},
        {3, 2, {{3, q(1)}}},
        {3, 4, {{2, q(1, 2)}, {1, q(-1, 2)}}},
        {3, 5, {{7, q(1)}}},
        {3, 6, {{7, q(1)}}},
        {3, 8, {{6, q(-1, 2)}, {5, q(-3, 2)}}},
        {4, 1, {{4, q(3)}}},
        {4, 2, {{4, q(1)}}},
        {4, 3, {{2, q(-1, 2)}, {1, q(-1, 2)}}},
        {4, 5, {{8, q(1)}}},
        {4, 6, {{8, q(-1)}}},
        {4, 7, {{6, q(-1, 2)}, {5, q(3, 2)}}},
        {5, 3, {{7, q(-1)}}},
        {5, 4, {{8, q(-1)}}},
        {6, 2, {{6, q(-1)}}},
        {6, 3, {{7, q(-1)}}},
        {6, 4, {{8, q(1)}}},
        {7, 1, {{7, q(-3)}}},
        {7, 2, {{7, q(1)}}},
        {7, 4, {{6, q(1, 2)}, {5, q(3, 2)}}},
        {8, 1, {{8, q(3)}}},
        {8, 2, {{8, q(1)}}},
        {8, 3, {{6, q(1, 2)}, {5, q(-3, 2)}}},
    });
}

}  // namespace gtable::gallery
