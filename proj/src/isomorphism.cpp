#include "gtable/gallery.hpp"

#include <algorithm>
#include <set>

namespace gtable::gallery {

namespace {

// c * lambda_s = d * lambda_r1 * lambda_r2
struct Equation {
    std::size_t r1, r2, s;
    Scalar c, d;
};

using Assignment = std::vector<std::optional<Scalar>>;

std::vector<Scalar> value_grid() {
    return {Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), Scalar(1, 2), Scalar(-1, 2),
            Scalar(3), Scalar(-3), Scalar(1, 3), Scalar(-1, 3)};
}

std::optional<Scalar> rational_sqrt(const Scalar& x) {
    if (x <= 0) return std::nullopt;
    mpz_class num = x.get_num(), den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Scalar r(rn, rd);
    r.canonicalize();
    return r;
}

std::set<int> intertwiner_indices(const GTable& a, const GTable& b) {
    std::set<int> qs;
    for (const auto* t : {&a, &b})
        for (const auto& [key, cell] : t->entries())
            for (const auto& e : cell) qs.insert(e.q);
    return qs;
}

// Equations for a diagonal f along the matching pi (source r goes to target pi[r]).
void add_equations(std::vector<Equation>& out, const GTable& a, const GTable& b,
                   const std::vector<std::size_t>& pi) {
    const std::size_t n = pi.size();
    const auto qs = intertwiner_indices(a, b);
    for (std::size_t r1 = 0; r1 < n; ++r1)
        for (std::size_t r2 = 0; r2 < n; ++r2)
            for (std::size_t s = 0; s < n; ++s)
                for (int q : qs) {
                    Scalar c = a.coefficient(r1, r2, s, q);
                    Scalar d = b.coefficient(pi[r1], pi[r2], pi[s], q);
                    if (c != 0 || d != 0) out.push_back({r1, r2, s, c, d});
                }
}

class Solver {
public:
    explicit Solver(std::vector<Equation> eqs) : eqs_(std::move(eqs)) {}

    std::optional<Assignment> solve(Assignment x) {
        ++tried;
        if (!propagate(x)) return std::nullopt;
        // A square root whose sign is free.
        for (const auto& e : eqs_)
            if (e.r1 == e.r2 && !x[e.r1] && x[e.s]) {
                auto root = rational_sqrt(e.c * *x[e.s] / e.d);
                if (!root) return std::nullopt;
                for (const Scalar& r : {*root, Scalar(-*root)}) {
                    Assignment y = x;
                    y[e.r1] = r;
                    if (auto done = solve(std::move(y))) return done;
                }
                return std::nullopt;
            }
        auto free = std::find(x.begin(), x.end(), std::nullopt);
        if (free == x.end()) return x;
        for (const Scalar& v : value_grid()) {
            Assignment y = x;
            y[free - x.begin()] = v;
            if (auto done = solve(std::move(y))) return done;
        }
        return std::nullopt;
    }

    std::size_t tried = 0;

private:
    bool propagate(Assignment& x) const {
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& e : eqs_) {
                // f is invertible, so every lambda is nonzero
                if (e.c == 0 || e.d == 0) return false;
                auto& s = x[e.s];
                auto& a = x[e.r1];
                auto& b = x[e.r2];
                if (s && a && b) {
                    if (e.c * *s != e.d * *a * *b) return false;
                } else if (!s && a && b) {
                    s = e.d * *a * *b / e.c;
                    changed = true;
                } else if (s && a && !b) {
                    b = e.c * *s / (e.d * *a);
                    changed = true;
                } else if (s && !a && b) {
                    a = e.c * *s / (e.d * *b);
                    changed = true;
                }
            }
        }
        return true;
    }

    std::vector<Equation> eqs_;
};

// All bijections source -> target that preserve irrep types, in lexicographic order per type.
class Matchings {
public:
    Matchings(const std::vector<SummandInfo>& source, const std::vector<SummandInfo>& target) {
        std::map<rep::IrrepId, std::vector<std::size_t>> src, tgt;
        for (std::size_t r = 0; r < source.size(); ++r) src[source[r].irrep].push_back(r);
        for (std::size_t x = 0; x < target.size(); ++x) tgt[target[x].irrep].push_back(x);
        valid_ = source.size() == target.size();
        for (const auto& [irrep, rs] : src) {
            auto it = tgt.find(irrep);
            if (it == tgt.end() || it->second.size() != rs.size()) valid_ = false;
            else classes_.push_back({rs, it->second});
        }
        pi_.assign(source.size(), 0);
    }

    bool valid() const { return valid_; }

    // Fills pi from the current state; returns false once exhausted.
    bool next(std::vector<std::size_t>& pi) {
        if (!valid_) return false;
        if (started_) {
            std::size_t k = classes_.size();
            while (k > 0) {
                --k;
                if (std::next_permutation(classes_[k].second.begin(), classes_[k].second.end())) break;
                if (k == 0) return false;
            }
            if (classes_.empty()) return false;
        }
        started_ = true;
        for (const auto& [rs, xs] : classes_)
            for (std::size_t i = 0; i < rs.size(); ++i) pi_[rs[i]] = xs[i];
        pi = pi_;
        return true;
    }

private:
    bool valid_ = true, started_ = false;
    std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> classes_;
    std::vector<std::size_t> pi_;
};

}  // namespace

IsomorphismSearch find_isomorphism(const GTable& cup, const GTable& bracket, const GTable& product,
                                   const GTable& lie) {
    if (cup.source() != bracket.source() || product.source() != lie.source())
        throw ShapeMismatch("both tables of an algebra must share their summands");
    const auto& source = cup.source();
    const auto& target = product.source();
    Matchings matchings(source, target);
    if (!matchings.valid()) throw NotFound("the summands have different isotypic multiplicities");

    IsomorphismSearch out;
    std::vector<std::size_t> pi;
    while (matchings.next(pi)) {
        ++out.matchings_tried;
        std::vector<Equation> eqs;
        // the bracket constraints are sparser and prune faster
        add_equations(eqs, bracket, lie, pi);
        add_equations(eqs, cup, product, pi);
        Solver solver(std::move(eqs));
        auto lambda = solver.solve(Assignment(source.size()));
        out.assignments_tried += solver.tried;
        if (!lambda) continue;
        GMatrix f(source, target);
        for (std::size_t r = 0; r < source.size(); ++r) f.set(pi[r], r, *(*lambda)[r]);
        if (check_morphism(bracket, lie, f) && check_morphism(cup, product, f)) {
            out.f = std::move(f);
            return out;
        }
    }
    throw NotFound("no type-preserving diagonal map intertwines both tables");
}

IsomorphismSearch find_isomorphism() {
    auto he = heisenberg_compute();
    auto gl = gl3_sl2_tables();
    return find_isomorphism(he.cup, he.bracket, gl.product, gl.bracket);
}

GMatrix archived_isomorphism() {
    auto reg = rep::sl2_first_labeling();
    const std::vector<Scalar> lambda = {1, 1, -1, 1, 1, Scalar(1, 3), 1, -1, 1, 1};
    GMatrix f(cup_fixture().source(), summand_infos(gl3_sl2_decomposition(reg)));
    for (std::size_t r = 0; r < lambda.size(); ++r) f.set(r, r, lambda[r]);
    return f;
}

}  // namespace gtable::gallery
