#include "gtable/verify.hpp"

#include "gtable/gallery.hpp"
#include "gtable/spec_file.hpp"

#include "json_util.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <random>
#include <sstream>
#include <thread>

namespace gtable::verify {

namespace {

using cochain::BigradedElement;
using cochain::ComplexContext;
using cochain::Monomial;
using la::Matrix;
using la::Scalar;
using la::Vector;

constexpr std::uint64_t kBaseSeed = 0x5eed2024;
constexpr std::size_t kCochainCases = 200;
constexpr std::size_t kAlgebraCases = 120;

std::uint64_t seed_for(const std::string& name) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : name) h = (h ^ c) * 1099511628211ull;
    return kBaseSeed ^ h;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(gen_); }
    Scalar scalar(bool nonzero = false) {
        int num = uniform(-3, 3);
        while (nonzero && num == 0) num = uniform(-3, 3);
        return la::ratio(num, uniform(1, 3));
    }
    template <class T>
    void shuffle(std::vector<T>& v) {
        std::shuffle(v.begin(), v.end(), gen_);
    }

private:
    std::mt19937_64 gen_;
};

struct Tally {
    CheckResult r;
    Tally(std::string suite, std::string name) : r{std::move(suite), std::move(name), 0, true, {}} {}
    void expect(bool ok, const std::string& detail) {
        ++r.cases;
        if (!ok && r.passed) {
            r.passed = false;
            r.detail = detail;
        }
    }
};

// ---------------------------------------------------------------- exactla

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, double density) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (rng.chance(density)) m(i, j) = rng.scalar();
    return m;
}

// Low rank with some probability, to exercise nontrivial kernels.
Matrix random_test_matrix(Rng& rng, std::size_t max_dim) {
    std::size_t rows = rng.uniform(1, int(max_dim)), cols = rng.uniform(1, int(max_dim));
    const double densities[] = {0.3, 0.6, 1.0};
    double density = densities[rng.uniform(0, 2)];
    if (rng.chance(0.4)) {
        std::size_t inner = rng.uniform(1, int(std::min(rows, cols)));
        return random_matrix(rng, rows, inner, density) * random_matrix(rng, inner, cols, density);
    }
    return random_matrix(rng, rows, cols, density);
}

Vector random_vector(Rng& rng, std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = rng.scalar();
    return v;
}

Matrix random_invertible(Rng& rng, std::size_t n) {
    for (;;) {
        Matrix m = random_matrix(rng, n, n, 0.7);
        if (la::rank(m) == n) return m;
    }
}

CheckResult kernel_rank_nullity() {
    Tally t("exactla", "kernel-rank-nullity");
    Rng rng(seed_for(t.r.name));
    for (std::size_t c = 0; c < kCochainCases; ++c) {
        Matrix m = random_test_matrix(rng, 8);
        auto ker = la::kernel(m);
        bool ok = ker.dim() + la::rank(m) == m.cols();
        for (const auto& k : ker.basis()) ok = ok && la::is_zero(m * k);
        t.expect(ok, "case " + std::to_string(c));
    }
    return t.r;
}

CheckResult solve_roundtrip() {
    Tally t("exactla", "solve-roundtrip");
    Rng rng(seed_for(t.r.name));
    for (std::size_t c = 0; c < kCochainCases; ++c) {
        Matrix m = random_test_matrix(rng, 8);
        Vector b = m * random_vector(rng, m.cols());
        auto sol = la::solve(m, b);
        bool ok = sol && m * sol->particular == b;
        if (ok) {
            Vector y = sol->particular;
            for (const auto& k : sol->kernel.basis()) la::axpy(rng.scalar(), k, y);
            ok = m * y == b;
        }
        // an inconsistent right-hand side must be rejected
        Vector r = random_vector(rng, m.rows());
        std::vector<Vector> cols;
        for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
        bool consistent = la::Subspace::span(m.rows(), cols).contains(r);
        ok = ok && la::solve(m, r).has_value() == consistent;
        t.expect(ok, "case " + std::to_string(c));
    }
    return t.r;
}

CheckResult canonical_span() {
    Tally t("exactla", "canonical-span");
    Rng rng(seed_for(t.r.name));
    for (std::size_t c = 0; c < kCochainCases; ++c) {
        std::size_t n = rng.uniform(1, 8), k = rng.uniform(1, 6);
        std::vector<Vector> gens;
        for (std::size_t i = 0; i < k; ++i) gens.push_back(random_vector(rng, n));
        Matrix mix = random_invertible(rng, k);
        std::vector<Vector> other;
        for (std::size_t i = 0; i < k; ++i) {
            Vector v(n);
            for (std::size_t j = 0; j < k; ++j) la::axpy(mix(i, j), gens[j], v);
            other.push_back(v);
        }
        other.push_back(la::add(gens[0], gens[k - 1]));
        rng.shuffle(other);
        auto a = la::Subspace::span(n, gens), b = la::Subspace::span(n, other);
        t.expect(a.basis() == b.basis() && a.pivots() == b.pivots(), "case " + std::to_string(c));
    }
    return t.r;
}

CheckResult dense_sparse_agreement() {
    Tally t("exactla", "dense-sparse-agreement");
    Rng rng(seed_for(t.r.name));
    for (std::size_t c = 0; c < kCochainCases + 10; ++c) {
        Matrix m = c < kCochainCases ? random_test_matrix(rng, 12) : random_matrix(rng, 70, 80, 0.05);
        auto d = la::rref_dense(m), s = la::rref_sparse(m);
        t.expect(d.rref == s.rref && d.pivots == s.pivots, "case " + std::to_string(c));
    }
    return t.r;
}

CheckResult inverse_identity() {
    Tally t("exactla", "inverse");
    Rng rng(seed_for(t.r.name));
    for (std::size_t c = 0; c < kCochainCases; ++c) {
        Matrix m = random_invertible(rng, rng.uniform(1, 6));
        t.expect(m * la::inverse(m) == Matrix::identity(m.rows()), "case " + std::to_string(c));
    }
    return t.r;
}

// ---------------------------------------------------------------- repkit

std::vector<rep::Registry> builtin_registries() {
    return {rep::sl2_first_labeling(), rep::sl2_poly_labeling(4), rep::gl_labeling(2), rep::gl_labeling(3),
            rep::s3_labeling()};
}

CheckResult registry_equivariance() {
    Tally t("repkit", "registry-equivariance");
    for (const auto& reg : builtin_registries()) {
        for (const auto& id : reg.irreps()) {
            bool ok = true;
            try {
                reg.model(id).module.validate();
            } catch (const Error&) {
                ok = false;
            }
            t.expect(ok, reg.name() + " model " + id.name() + " fails its relations");
        }
        for (const auto& [tr, maps] : reg.all_maps())
            for (const auto& m : maps)
                t.expect(rep::is_equivariant(m, reg.model(tr.left).module, reg.model(tr.right).module,
                                             reg.model(tr.out).module),
                         reg.name() + " map " + tr.left.name() + " x " + tr.right.name() + " -> " + tr.out.name());
    }
    return t.r;
}

CheckResult intertwiner_independence() {
    Tally t("repkit", "intertwiner-independence");
    for (const auto& reg : builtin_registries())
        for (const auto& [tr, maps] : reg.all_maps()) {
            if (maps.size() < 2) continue;
            std::vector<Vector> rows;
            for (const auto& m : maps) {
                Vector v;
                for (std::size_t i = 0; i < m.coeffs().rows(); ++i)
                    for (std::size_t j = 0; j < m.coeffs().cols(); ++j) v.push_back(m.coeffs()(i, j));
                rows.push_back(v);
            }
            t.expect(la::rank(Matrix::from_rows(rows, rows[0].size())) == maps.size(),
                     reg.name() + " maps for " + tr.left.name() + " x " + tr.right.name() + " -> " + tr.out.name());
        }
    return t.r;
}

rep::GModule conjugated(const rep::GModule& m, const Matrix& p) {
    rep::GModule out = m;
    Matrix inv = la::inverse(p);
    for (auto& op : out.ops) op = p * op * inv;
    return out;
}

std::vector<SummandInfo> random_summands(Rng& rng, const rep::Registry& reg, std::size_t lo, std::size_t hi) {
    auto irreps = reg.irreps();
    std::vector<SummandInfo> out;
    std::size_t n = rng.uniform(int(lo), int(hi));
    for (std::size_t i = 0; i < n; ++i) {
        auto id = irreps[rng.uniform(0, int(irreps.size()) - 1)];
        std::optional<int> w;
        if (id.group.kind == rep::GroupKind::SL2) w = id.label;
        out.push_back({"R" + std::to_string(i + 1), id, w});
    }
    return out;
}

CheckResult sl2_decomposition() {
    Tally t("repkit", "sl2-decomposition");
    Rng rng(seed_for(t.r.name));
    const auto reg = rep::sl2_poly_labeling(4);
    for (std::size_t c = 0; c < 100; ++c) {
        auto m = model_module(random_summands(rng, reg, 1, 4), reg);
        m = conjugated(m, random_invertible(rng, m.dim));
        bool ok = true;
        try {
            auto dec = rep::decompose_sl2(m, reg);
            std::size_t total = 0;
            for (const auto& s : dec.summands) {
                total += s.tau.cols();
                Vector top = s.tau * reg.model(s.irrep).hwv;
                ok = ok && la::is_zero(m.ops[0] * top) && m.ops[1] * top == la::scale(s.irrep.label, top);
            }
            ok = ok && total == m.dim && la::rank(dec.basis_matrix()) == m.dim;
        } catch (const Error&) {
            ok = false;
        }
        t.expect(ok, "case " + std::to_string(c));
    }
    return t.r;
}

CheckResult s3_decomposition() {
    Tally t("repkit", "s3-decomposition");
    Rng rng(seed_for(t.r.name));
    const auto reg = rep::s3_labeling();
    for (std::size_t c = 0; c < 100; ++c) {
        auto m = model_module(random_summands(rng, reg, 1, 4), reg);
        m = conjugated(m, random_invertible(rng, m.dim));
        bool ok = true;
        try {
            auto dec = rep::decompose_s3(m, reg);
            std::size_t total = 0;
            for (const auto& s : dec.summands) total += s.tau.cols();
            ok = total == m.dim && la::rank(dec.basis_matrix()) == m.dim;
        } catch (const Error&) {
            ok = false;
        }
        t.expect(ok, "case " + std::to_string(c));
    }
    return t.r;
}

CheckResult braiding() {
    Tally t("repkit", "braiding");
    auto swapped_agree = [&](const rep::Registry& reg, const rep::IrrepId& a, const rep::IrrepId& b,
                             const rep::IrrepId& c) {
        const auto& ab = reg.maps(a, b, c).at(0);
        const auto& ba = reg.maps(b, a, c).at(0);
        for (std::size_t i = 0; i < ab.left_dim(); ++i)
            for (std::size_t j = 0; j < ab.right_dim(); ++j)
                t.expect(ab.on_basis(i, j) == ba.on_basis(j, i),
                         reg.name() + " " + a.name() + " x " + b.name() + " basis pair");
    };
    const rep::Group g = rep::Group::sl2();
    swapped_agree(rep::sl2_first_labeling(), {g, 1}, {g, 2}, {g, 1});
    const rep::Group s = rep::Group::s3();
    swapped_agree(rep::s3_labeling(), {s, rep::kSg}, {s, rep::kStd}, {s, rep::kStd});
    return t.r;
}

// ---------------------------------------------------------------- supercochain

int total_degree(const BigradedElement& a) {
    auto bd = a.bidegree();
    return bd ? bd->first + bd->second : 0;
}

Scalar sign(int e) { return e % 2 ? Scalar(-1) : Scalar(1); }

std::uint32_t random_subset(Rng& rng, int n, int k) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    rng.shuffle(idx);
    std::uint32_t s = 0;
    for (int i = 0; i < k; ++i) s |= 1u << idx[i];
    return s;
}

BigradedElement random_homogeneous(Rng& rng, int n, int p, int q) {
    BigradedElement a;
    int terms = rng.uniform(1, 3);
    for (int i = 0; i < terms; ++i) a.add_term({random_subset(rng, n, p), random_subset(rng, n, q)}, rng.scalar(true));
    return a;
}

BigradedElement random_homogeneous(Rng& rng, int n) {
    for (;;) {
        auto a = random_homogeneous(rng, n, rng.uniform(0, n), rng.uniform(0, n));
        if (!a.is_zero()) return a;
    }
}

BigradedElement random_in(Rng& rng, int n, int p, int q) {
    if (p < 0 || q < 0 || p > n || q > n) return {};
    return random_homogeneous(rng, n, p, q);
}

struct LieSeed {
    int n;
    std::vector<std::tuple<int, int, int, int>> brackets;  // [e_i, e_j] = c e_k for i < j
};

const std::vector<LieSeed>& lie_seeds() {
    static const std::vector<LieSeed> seeds = {
        {2, {}},
        {2, {{0, 1, 1, 1}}},
        {3, {{0, 1, 2, 1}}},
        {3, {{0, 1, 0, -2}, {1, 2, 2, -2}, {0, 2, 1, 1}}},
        {3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {0, 2, 1, -1}}},
        {3, {{0, 1, 1, 1}, {0, 2, 2, 1}}},
        {4, {{0, 1, 0, -2}, {1, 2, 2, -2}, {0, 2, 1, 1}}},
        {4, {{0, 1, 2, 1}, {0, 2, 3, 1}}},
        {4, {{0, 1, 1, 1}, {2, 3, 3, 1}}},
        {4, {{0, 1, 2, 1}}},
    };
    return seeds;
}

// The seed algebra in a random basis.
ComplexContext random_context(Rng& rng, int n) {
    std::vector<const LieSeed*> pool;
    for (const auto& s : lie_seeds())
        if (s.n == n) pool.push_back(&s);
    const LieSeed& seed = *pool[rng.uniform(0, int(pool.size()) - 1)];
    auto bracket = [&](const Vector& u, const Vector& v) {
        Vector w(n);
        for (const auto& [i, j, k, c] : seed.brackets) w[k] += Scalar(c) * (u[i] * v[j] - u[j] * v[i]);
        return w;
    };
    Matrix p = random_invertible(rng, n), pinv = la::inverse(p);
    std::vector<std::vector<Vector>> structure(n, std::vector<Vector>(n, la::zero_vector(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) structure[i][j] = pinv * bracket(p.column(i), p.column(j));
    return ComplexContext::from_lie_bracket(n, structure);
}

bool in_bidegree(const BigradedElement& a, int p, int q) {
    for (const auto& [m, c] : a.terms())
        if (m.p() != p || m.q() != q) return false;
    return true;
}

using PairProperty = std::function<bool(Rng&, int)>;

CheckResult cochain_property(const std::string& name, int n, const PairProperty& prop) {
    Tally t("supercochain", name + "[dim=" + std::to_string(n) + "]");
    Rng rng(seed_for(t.r.name));
    for (std::size_t c = 0; c < kCochainCases; ++c) t.expect(prop(rng, n), "case " + std::to_string(c));
    return t.r;
}

bool vee_supercommutative(Rng& rng, int n) {
    auto a = random_homogeneous(rng, n), b = random_homogeneous(rng, n);
    return cochain::vee(a, b) == sign(total_degree(a) * total_degree(b)) * cochain::vee(b, a);
}

bool vee_associative(Rng& rng, int n) {
    auto a = random_homogeneous(rng, n), b = random_homogeneous(rng, n), c = random_homogeneous(rng, n);
    return cochain::vee(cochain::vee(a, b), c) == cochain::vee(a, cochain::vee(b, c));
}

bool bracket_antisymmetric(Rng& rng, int n) {
    auto a = random_homogeneous(rng, n), b = random_homogeneous(rng, n);
    return cochain::bracket(a, b) == -(sign(total_degree(a) * total_degree(b)) * cochain::bracket(b, a));
}

bool poisson_identity(Rng& rng, int n) {
    auto a = random_homogeneous(rng, n), b = random_homogeneous(rng, n), c = random_homogeneous(rng, n);
    using cochain::bracket;
    using cochain::vee;
    return bracket(vee(a, b), c) ==
           vee(a, bracket(b, c)) + sign(total_degree(a) * total_degree(b)) * vee(b, bracket(a, c));
}

bool super_jacobi(Rng& rng, int n) {
    auto a = random_homogeneous(rng, n), b = random_homogeneous(rng, n), c = random_homogeneous(rng, n);
    using cochain::bracket;
    return bracket(a, bracket(b, c)) ==
           bracket(bracket(a, b), c) + sign(total_degree(a) * total_degree(b)) * bracket(b, bracket(a, c));
}

bool peeling_independent(Rng& rng, int n) {
    auto mono = random_homogeneous(rng, n);
    const Monomial m = mono.terms().begin()->first;
    auto c = random_homogeneous(rng, n);
    auto gens = cochain::factors(m);
    rng.shuffle(gens);
    Scalar s = cochain::product(gens).coefficient(m);
    return cochain::bracket_peeled(gens, c) == s * cochain::bracket(BigradedElement::from_monomial(m), c);
}

bool degree_bookkeeping(Rng& rng, int n) {
    int p1 = rng.uniform(0, n), q1 = rng.uniform(0, n), p2 = rng.uniform(0, n), q2 = rng.uniform(0, n);
    auto a = random_homogeneous(rng, n, p1, q1), b = random_homogeneous(rng, n, p2, q2);
    auto v = cochain::vee(a, b), br = cochain::bracket(a, b);
    bool ok = in_bidegree(v, p1 + p2, q1 + q2) && in_bidegree(br, p1 + p2 - 1, q1 + q2 - 1);
    if (p1 + p2 > n || q1 + q2 > n) ok = ok && v.is_zero();
    if (p1 + p2 - 1 > n || q1 + q2 - 1 > n || p1 + p2 < 1 || q1 + q2 < 1) ok = ok && br.is_zero();
    return ok;
}

bool d_derives_products(Rng& rng, int n) {
    auto ctx = random_context(rng, n);
    auto a = random_homogeneous(rng, n), b = random_homogeneous(rng, n);
    auto d = [&](const BigradedElement& x) { return cochain::differential(x, ctx); };
    const Scalar s = sign(total_degree(a));
    bool vee_ok = d(cochain::vee(a, b)) == cochain::vee(d(a), b) + s * cochain::vee(a, d(b));
    bool br_ok = d(cochain::bracket(a, b)) == cochain::bracket(d(a), b) + s * cochain::bracket(a, d(b));
    return vee_ok && br_ok;
}

bool is_exact(const ComplexContext& ctx, const BigradedElement& z) {
    if (z.is_zero()) return true;
    auto bd = z.bidegree();
    if (!bd) return false;
    auto h = cochain::cohomology(ctx, bd->first, bd->second);
    return h.boundaries.contains(cochain::to_vector(z, ctx.n, bd->first, bd->second));
}

BigradedElement random_cocycle(Rng& rng, const ComplexContext& ctx, int p, int q) {
    auto h = cochain::cohomology(ctx, p, q);
    Vector v(h.cocycles.ambient_dim());
    for (const auto& z : h.cocycles.basis()) la::axpy(rng.scalar(), z, v);
    return cochain::from_vector(v, ctx.n, p, q);
}

bool induced_products_well_defined(Rng& rng, int n) {
    auto ctx = random_context(rng, n);
    int p1 = rng.uniform(0, n), q1 = rng.uniform(0, n), p2 = rng.uniform(0, n), q2 = rng.uniform(0, n);
    auto z1 = random_cocycle(rng, ctx, p1, q1), z2 = random_cocycle(rng, ctx, p2, q2);
    auto shifted = [&](const BigradedElement& z, int p, int q) {
        return z + cochain::differential(random_in(rng, n, p - 1, q), ctx);
    };
    auto w1 = shifted(z1, p1, q1), w2 = shifted(z2, p2, q2);
    return is_exact(ctx, cochain::vee(w1, w2) - cochain::vee(z1, z2)) &&
           is_exact(ctx, cochain::bracket(w1, w2) - cochain::bracket(z1, z2));
}

CheckResult lie_structures(int n) {
    Tally t("supercochain", "mu-closed-and-d-squared[dim=" + std::to_string(n) + "]");
    Rng rng(seed_for(t.r.name));
    for (int trial = 0; trial < 6 || t.r.cases < kCochainCases; ++trial) {
        auto ctx = random_context(rng, n);
        bool valid = true;
        try {
            ctx.validate();
        } catch (const Error&) {
            valid = false;
        }
        t.expect(valid, "{mu, mu} != 0 for trial " + std::to_string(trial));
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q)
                for (const auto& m : cochain::basis(n, p, q)) {
                    auto c = BigradedElement::from_monomial(m);
                    t.expect(cochain::differential(cochain::differential(c, ctx), ctx).is_zero(),
                             "d^2 != 0 on " + cochain::render(c));
                }
    }
    return t.r;
}

CheckResult sl2_commutes_with_d() {
    Tally t("supercochain", "sl2-commutes-with-d");
    auto ctx = gallery::heisenberg_context();
    for (int X = 0; X < 3; ++X)
        for (int p = 0; p <= 3; ++p)
            for (int q = 0; q <= 3; ++q)
                for (const auto& m : cochain::basis(3, p, q)) {
                    auto c = BigradedElement::from_monomial(m);
                    t.expect(cochain::sl2_act(X, cochain::differential(c, ctx), ctx) ==
                                 cochain::differential(cochain::sl2_act(X, c, ctx), ctx),
                             "operator " + std::to_string(X) + " on " + cochain::render(c, &ctx));
                }
    return t.r;
}

// ---------------------------------------------------------------- gtable

struct NamedTable {
    std::string name;
    GTable table;
    rep::Registry reg;
};

std::vector<NamedTable> gallery_tables() {
    std::vector<NamedTable> out;
    auto he = gallery::heisenberg_compute();
    const auto sl2 = rep::sl2_first_labeling();
    out.push_back({"h bracket", gallery::heisenberg_lie_table(), sl2});
    out.push_back({"H_E cup", he.cup, sl2});
    out.push_back({"H_E bracket", he.bracket, sl2});
    for (int n : {2, 3}) {
        auto g = gallery::gln_tables(n);
        out.push_back({"gl(" + std::to_string(n) + ") product", g.product, rep::gl_labeling(n)});
        out.push_back({"gl(" + std::to_string(n) + ") bracket", g.bracket, rep::gl_labeling(n)});
    }
    auto corner = gallery::gl3_sl2_tables();
    out.push_back({"gl(3) product under SL2", corner.product, sl2});
    out.push_back({"gl(3) bracket under SL2", corner.bracket, sl2});
    out.push_back({"K[S3] table", gallery::s3_table_report().computed, rep::s3_labeling()});
    out.push_back({"K[S3] cotable", gallery::s3_cotable_report().computed, rep::s3_labeling()});
    for (int k = 2; k <= 5; ++k)
        out.push_back({"M_" + std::to_string(k), gallery::mk_report(k).computed, rep::gl_labeling(k)});
    out.push_back({"sl(3)", gallery::sl3_report().computed, sl2});
    out.push_back({"K[x,y] up to degree 4", gallery::poly_report(4).computed, rep::sl2_poly_labeling(4)});
    return out;
}

GTable roundtrip(const GTable& t, const rep::Registry& reg) {
    return extract(model_module(t.source(), reg), expand(t, reg), model_decomposition(t.source(), reg), reg);
}

CheckResult extract_expand_roundtrip() {
    Tally t("gtable", "extract-expand-roundtrip");
    for (const auto& nt : gallery_tables()) t.expect(roundtrip(nt.table, nt.reg) == nt.table, nt.name);
    return t.r;
}

CheckResult extract_determinism() {
    Tally t("gtable", "extract-determinism");
    for (const auto& nt : gallery_tables()) t.expect(roundtrip(nt.table, nt.reg) == roundtrip(nt.table, nt.reg), nt.name);
    auto a = gallery::heisenberg_compute(), b = gallery::heisenberg_compute();
    t.expect(a.cup == b.cup && a.bracket == b.bracket, "Heisenberg pipeline");
    return t.r;
}

CheckResult identity_morphism() {
    Tally t("gtable", "identity-morphism");
    for (const auto& nt : gallery_tables())
        t.expect(check_morphism(nt.table, nt.table, GMatrix::identity(nt.table.source())), nt.name);
    return t.r;
}

GTable random_table(Rng& rng, const rep::Registry& reg, const std::vector<SummandInfo>& s) {
    GTable t(reg.group(), reg.name(), s, s);
    for (std::size_t r1 = 0; r1 < s.size(); ++r1)
        for (std::size_t r2 = 0; r2 < s.size(); ++r2)
            for (std::size_t x = 0; x < s.size(); ++x) {
                auto d = reg.multiplicity(s[r1].irrep, s[r2].irrep, s[x].irrep);
                for (std::size_t q = 1; q <= d; ++q)
                    if (rng.chance(0.4)) t.add(r1, r2, x, int(q), rng.scalar(true));
            }
    return t;
}

GMatrix random_gmatrix(Rng& rng, const std::vector<SummandInfo>& s, bool invertible) {
    GMatrix f(s, s);
    std::map<rep::IrrepId, std::vector<std::size_t>> classes;
    for (std::size_t r = 0; r < s.size(); ++r) classes[s[r].irrep].push_back(r);
    for (const auto& [id, idx] : classes) {
        Matrix m = invertible ? random_invertible(rng, idx.size()) : random_matrix(rng, idx.size(), idx.size(), 0.6);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) f.set(idx[i], idx[j], m(i, j));
    }
    return f;
}

struct RandomCase {
    const rep::Registry* reg;
    GTable a, b;
    GMatrix f;
};

// Kinds cycle through: transported (a morphism by construction), transported then
// perturbed, and unrelated random data.
std::vector<RandomCase> random_corpus(const std::vector<rep::Registry>& regs) {
    Rng rng(seed_for("random-algebra-corpus"));
    std::vector<RandomCase> out;
    for (std::size_t c = 0; c < kAlgebraCases; ++c) {
        const rep::Registry& reg = regs[c % regs.size()];
        auto s = random_summands(rng, reg, 1, 4);
        GTable a = random_table(rng, reg, s);
        const int kind = int(c / regs.size()) % 3;
        GMatrix f = random_gmatrix(rng, s, kind != 2);
        GTable b;
        if (kind == 2) {
            b = random_table(rng, reg, s);
        } else {
            Matrix phi = assemble_map(f, reg), inv = la::inverse(phi);
            b = extract(model_module(s, reg), expand(a, reg).transformed(phi, inv, inv), model_decomposition(s, reg), reg);
            if (kind == 1) {
                std::size_t r1 = rng.uniform(0, int(s.size()) - 1), r2 = rng.uniform(0, int(s.size()) - 1);
                for (std::size_t x = 0; x < s.size(); ++x)
                    if (reg.multiplicity(s[r1].irrep, s[r2].irrep, s[x].irrep) > 0) {
                        b.add(r1, r2, x, 1, 1);
                        break;
                    }
            }
        }
        out.push_back({&reg, std::move(a), std::move(b), std::move(f)});
    }
    return out;
}

std::vector<rep::Registry> corpus_registries() {
    return {rep::sl2_first_labeling(), rep::s3_labeling(), rep::gl_labeling(3)};
}

CheckResult morphism_oracle() {
    Tally t("gtable", "morphism-oracle");
    const auto regs = corpus_registries();
    std::size_t morphisms = 0;
    for (const auto& c : random_corpus(regs)) {
        bool table_side = check_morphism(c.a, c.b, c.f);
        bool direct = is_algebra_morphism(expand(c.a, *c.reg), expand(c.b, *c.reg), assemble_map(c.f, *c.reg));
        morphisms += direct;
        t.expect(table_side == direct, "disagreement at case " + std::to_string(t.r.cases));
    }
    t.expect(morphisms > 0 && morphisms < kAlgebraCases, "corpus lacks morphisms or non-morphisms");
    return t.r;
}

CheckResult corollary_agreement() {
    Tally t("gtable", "corollary-agreement");
    const auto regs = corpus_registries();
    for (const auto& c : random_corpus(regs))
        t.expect(corollary_check(c.a, c.b, c.f, *c.reg) == check_morphism(c.a, c.b, c.f),
                 "disagreement at case " + std::to_string(t.r.cases));
    return t.r;
}

CheckResult json_roundtrip() {
    Tally t("gtable", "json-roundtrip");
    for (const auto& nt : gallery_tables()) {
        auto text = to_json(nt.table);
        auto back = parse_json(text);
        t.expect(back == nt.table && to_json(back) == text, nt.name);
    }
    Rng rng(seed_for(t.r.name));
    const auto regs = corpus_registries();
    for (std::size_t c = 0; c < 100; ++c) {
        const auto& reg = regs[c % regs.size()];
        auto table = random_table(rng, reg, random_summands(rng, reg, 1, 4));
        t.expect(parse_json(to_json(table)) == table, "random table " + std::to_string(c));
    }
    return t.r;
}

// ---------------------------------------------------------------- gallery

CheckResult heisenberg_dimensions() {
    Tally t("gallery", "heisenberg-dimensions");
    auto ctx = gallery::heisenberg_context();
    const std::map<std::pair<int, int>, std::size_t> expected = {
        {{0, 0}, 1}, {{2, 0}, 2}, {{1, 1}, 4}, {{3, 1}, 2}, {{0, 2}, 2}, {{2, 2}, 4}, {{1, 3}, 2}, {{3, 3}, 1}};
    std::size_t even = 0;
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) {
            if ((p + q) % 2) continue;
            auto dim = cochain::cohomology(ctx, p, q).dim();
            even += dim;
            auto it = expected.find({p, q});
            t.expect(dim == (it == expected.end() ? 0 : it->second),
                     "bidegree (" + std::to_string(p) + "," + std::to_string(q) + ") has dimension " + std::to_string(dim));
        }
    t.expect(even == 18, "even total " + std::to_string(even));
    return t.r;
}

CheckResult heisenberg_representatives() {
    Tally t("gallery", "heisenberg-representatives");
    for (const auto& c : gallery::check_representatives(gallery::heisenberg_context())) t.expect(c.ok(), c.id);
    return t.r;
}

CheckResult heisenberg_bidegrees() {
    Tally t("gallery", "heisenberg-bidegree-closure");
    std::map<std::string, std::pair<int, int>> bd;
    for (const auto& row : gallery::representatives()) bd[row.id] = {row.p, row.q};
    auto he = gallery::heisenberg_compute();
    auto check = [&](const GTable& table, int shift, const std::string& what) {
        for (const auto& [key, cell] : table.entries())
            for (const auto& e : cell) {
                auto a = bd.at(table.source()[key.first].id), b = bd.at(table.source()[key.second].id);
                auto s = bd.at(table.target()[e.s].id);
                t.expect(s.first == a.first + b.first - shift && s.second == a.second + b.second - shift,
                         what + " " + table.source()[key.first].id + " x " + table.source()[key.second].id);
            }
    };
    check(he.cup, 0, "cup");
    check(he.bracket, 1, "bracket");
    check(gallery::cup_fixture(), 0, "cup fixture");
    check(gallery::bracket_fixture(), 1, "bracket fixture");
    return t.r;
}

CheckResult heisenberg_symmetry() {
    Tally t("gallery", "heisenberg-symmetry");
    const auto reg = rep::sl2_first_labeling();
    // Every class has even total degree, so the cup product is symmetric and the bracket antisymmetric.
    auto check = [&](const GTable& table, int sgn, const std::string& what) {
        auto b = expand(table, reg);
        for (std::size_t i = 0; i < b.left_dim(); ++i)
            for (std::size_t j = 0; j < b.right_dim(); ++j)
                t.expect(b.on_basis(i, j) == la::scale(sgn, b.on_basis(j, i)), what);
    };
    auto he = gallery::heisenberg_compute();
    check(he.cup, 1, "cup");
    check(he.bracket, -1, "bracket");
    check(gallery::cup_fixture(), 1, "cup fixture");
    check(gallery::bracket_fixture(), -1, "bracket fixture");
    return t.r;
}

CheckResult heisenberg_poisson() {
    Tally t("gallery", "heisenberg-poisson-axioms");
    auto a = gallery::heisenberg_algebra();
    auto r = gallery::poisson_axioms(a.cup, a.bracket);
    t.r.cases = r.triples;
    if (!r.ok()) {
        t.r.passed = false;
        t.r.detail = "even cohomology violates an axiom";
    }
    return t.r;
}

CheckResult gln_axioms_check(int n) {
    Tally t("gallery", "gln-axioms[n=" + std::to_string(n) + "]");
    auto r = gallery::gln_axioms(n);
    t.r.cases = r.triples;
    if (!r.ok()) {
        t.r.passed = false;
        t.r.detail = std::string(!r.associative ? "associativity" : !r.commutative ? "commutativity"
                                 : !r.jacobi      ? "Jacobi"
                                 : !r.leibniz     ? "Leibniz"
                                                  : "antisymmetry") + " fails";
    }
    return t.r;
}

CheckResult archived_isomorphism_check() {
    Tally t("gallery", "archived-isomorphism");
    auto he = gallery::heisenberg_compute();
    auto gl = gallery::gl3_sl2_tables();
    auto f = gallery::archived_isomorphism();
    t.expect(check_morphism(he.bracket, gl.bracket, f), "bracket tables");
    t.expect(check_morphism(he.cup, gl.product, f), "product tables");
    t.expect(la::rank(plain_map(f)) == f.source().size(), "not invertible");
    return t.r;
}

Check make(std::string suite, std::string name, std::function<CheckResult()> fn) {
    return {std::move(suite), std::move(name), std::move(fn)};
}

std::vector<Check> all_checks() {
    std::vector<Check> out = {
        make("exactla", "kernel-rank-nullity", kernel_rank_nullity),
        make("exactla", "solve-roundtrip", solve_roundtrip),
        make("exactla", "canonical-span", canonical_span),
        make("exactla", "dense-sparse-agreement", dense_sparse_agreement),
        make("exactla", "inverse", inverse_identity),
        make("repkit", "registry-equivariance", registry_equivariance),
        make("repkit", "intertwiner-independence", intertwiner_independence),
        make("repkit", "sl2-decomposition", sl2_decomposition),
        make("repkit", "s3-decomposition", s3_decomposition),
        make("repkit", "braiding", braiding),
    };
    const std::vector<std::pair<std::string, PairProperty>> props = {
        {"vee-supercommutative", vee_supercommutative},
        {"vee-associative", vee_associative},
        {"bracket-antisymmetry", bracket_antisymmetric},
        {"poisson-identity", poisson_identity},
        {"super-jacobi", super_jacobi},
        {"peeling-independence", peeling_independent},
        {"degree-bookkeeping", degree_bookkeeping},
        {"d-derives-products", d_derives_products},
        {"induced-products-well-defined", induced_products_well_defined},
    };
    for (int n = 2; n <= 4; ++n) {
        for (const auto& [name, prop] : props)
            out.push_back(make("supercochain", name + "[dim=" + std::to_string(n) + "]",
                               [name = name, prop = prop, n] { return cochain_property(name, n, prop); }));
        out.push_back(make("supercochain", "mu-closed-and-d-squared[dim=" + std::to_string(n) + "]",
                           [n] { return lie_structures(n); }));
    }
    out.push_back(make("supercochain", "sl2-commutes-with-d", sl2_commutes_with_d));
    const std::vector<Check> rest = {
        make("gtable", "extract-expand-roundtrip", extract_expand_roundtrip),
        make("gtable", "extract-determinism", extract_determinism),
        make("gtable", "identity-morphism", identity_morphism),
        make("gtable", "morphism-oracle", morphism_oracle),
        make("gtable", "corollary-agreement", corollary_agreement),
        make("gtable", "json-roundtrip", json_roundtrip),
        make("gallery", "heisenberg-dimensions", heisenberg_dimensions),
        make("gallery", "heisenberg-representatives", heisenberg_representatives),
        make("gallery", "heisenberg-bidegree-closure", heisenberg_bidegrees),
        make("gallery", "heisenberg-symmetry", heisenberg_symmetry),
        make("gallery", "heisenberg-poisson-axioms", heisenberg_poisson),
        make("gallery", "gln-axioms[n=2]", [] { return gln_axioms_check(2); }),
        make("gallery", "gln-axioms[n=3]", [] { return gln_axioms_check(3); }),
        make("gallery", "gln-axioms[n=4]", [] { return gln_axioms_check(4); }),
        make("gallery", "archived-isomorphism", archived_isomorphism_check),
    };
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"exactla", "repkit", "supercochain", "gtable", "gallery"};
    return names;
}

std::vector<Check> checks(std::string_view suite) {
    if (!suite.empty() && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw ParseError("unknown module '" + std::string(suite) + "'");
    std::vector<Check> out;
    for (auto& c : all_checks())
        if (suite.empty() || c.suite == suite) out.push_back(std::move(c));
    return out;
}

unsigned worker_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("GTABLE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return unsigned(std::min<long>(v, hw));
    }
    return hw;
}

std::vector<CheckResult> run_checks(const std::vector<Check>& list, unsigned workers) {
    std::vector<CheckResult> results(list.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < list.size(); i = next++) {
            try {
                results[i] = list[i].run();
            } catch (const std::exception& ex) {
                results[i] = {list[i].suite, list[i].name, 0, false, std::string("exception: ") + ex.what()};
            }
        }
    };
    workers = std::max(1u, std::min<unsigned>(workers, unsigned(list.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    return results;
}

std::string render_text(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto& r : results) {
        passed += r.passed;
        os << (r.passed ? "PASS " : "FAIL ") << r.suite << "/" << r.name << " (" << r.cases << " cases)";
        if (!r.passed) os << ": " << r.detail;
        os << '\n';
    }
    os << passed << "/" << results.size() << " checks passed\n";
    return os.str();
}

std::string render_json(const std::vector<CheckResult>& results) {
    detail::ojson arr = detail::ojson::array();
    for (const auto& r : results) {
        detail::ojson j;
        j["suite"] = r.suite;
        j["name"] = r.name;
        j["cases"] = r.cases;
        j["passed"] = r.passed;
        if (!r.passed) j["detail"] = r.detail;
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

}  // namespace gtable::verify
