#include "gtable/spec_file.hpp"

#include "json_util.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace gtable {

using detail::ojson;

namespace {

Scalar scalar_field(const ojson& j) {
    if (j.is_string()) return la::parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
    throw ParseError("scalars must be strings \"num/den\" or integers");
}

Vector vector_field(const ojson& j, std::size_t n, const std::string& what) {
    if (!j.is_array() || j.size() != n) throw ParseError(what + " must have length " + std::to_string(n));
    Vector v;
    for (const auto& x : j) v.push_back(scalar_field(x));
    return v;
}

Matrix matrix_field(const ojson& j, std::size_t rows, std::size_t cols, const std::string& what) {
    if (!j.is_array() || j.size() != rows)
        throw ParseError(what + " must have " + std::to_string(rows) + " rows");
    std::vector<Vector> rs;
    for (const auto& r : j) rs.push_back(vector_field(r, cols, what + " row"));
    return Matrix::from_rows(rs, cols);
}

std::size_t index_field(const ojson& j, const char* key, std::size_t bound) {
    long v = j.at(key).get<long>();
    if (v < 0 || std::size_t(v) >= bound) throw ParseError(std::string("index '") + key + "' out of range");
    return std::size_t(v);
}

ojson scalar_json(const Scalar& x) { return la::to_string(x); }

ojson vector_json(const Vector& v) {
    ojson a = ojson::array();
    for (const auto& x : v) a.push_back(scalar_json(x));
    return a;
}

ojson matrix_json(const Matrix& m) {
    ojson a = ojson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_json(m.row(i)));
    return a;
}

rep::IrrepId irrep_field(const ojson& j, const rep::Group& g) {
    rep::IrrepId id = detail::irrep_from_json(j);
    if (id.group != g) throw ParseError("summand irrep belongs to another group");
    return id;
}

std::size_t expected_ops(const rep::Group& g) {
    switch (g.kind) {
        case rep::GroupKind::SL2: return 3;
        case rep::GroupKind::GL: return std::size_t(g.k * g.k);
        case rep::GroupKind::S3: return 2;
    }
    return 0;
}

rep::Decomposition decompose(const AlgebraSpec& spec, const rep::GModule& m, const rep::Registry& reg) {
    if (spec.summands.empty()) {
        switch (spec.group.kind) {
            case rep::GroupKind::SL2: return rep::decompose_sl2(m, reg);
            case rep::GroupKind::S3: return rep::decompose_s3(m, reg);
            case rep::GroupKind::GL: throw ParseError("GL spec files must list their summands with tau maps");
        }
    }
    const bool by_hwv = spec.summands.front().hwv.has_value();
    for (const auto& s : spec.summands)
        if (s.hwv.has_value() != by_hwv) throw ParseError("summands must all give either hwv or tau");
    if (by_hwv) {
        std::vector<rep::HwvChoice> choices;
        for (const auto& s : spec.summands) choices.push_back({s.id, *s.hwv});
        return rep::decompose_sl2(m, reg, choices);
    }
    rep::Decomposition dec{spec.group, m.dim, {}};
    for (const auto& s : spec.summands) {
        std::optional<int> weight;
        if (spec.group.kind == rep::GroupKind::SL2) weight = s.irrep->label;
        dec.summands.push_back({s.id, *s.irrep, weight, *s.tau});
    }
    dec.validate(m, reg);
    return dec;
}

}  // namespace

rep::Registry labeling_by_name(const rep::Group& group, const std::string& name) {
    std::smatch match;
    rep::Registry reg = [&] {
        if (name == "sl2-first") return rep::sl2_first_labeling();
        if (name == "s3") return rep::s3_labeling();
        static const std::regex poly(R"(sl2-poly\((\d+)\))"), gl(R"(gl-(\d+))");
        if (std::regex_match(name, match, poly)) return rep::sl2_poly_labeling(std::stoi(match[1]));
        if (std::regex_match(name, match, gl)) return rep::gl_labeling(std::stoi(match[1]));
        throw ParseError("unknown labeling '" + name + "'");
    }();
    if (reg.group() != group) throw ParseError("labeling '" + name + "' is not a labeling of " + group.name());
    return reg;
}

AlgebraSpec parse_spec(std::string_view json_text) {
    try {
        ojson j = ojson::parse(json_text);
        AlgebraSpec spec;
        spec.group = rep::Group::parse(j.at("group").get<std::string>());
        spec.labeling = j.contains("labeling") ? j.at("labeling").get<std::string>()
                                               : rep::builtin_labeling(spec.group).name();
        const long dim = j.at("dim").get<long>();
        if (dim <= 0) throw ParseError("dim must be positive");
        const std::size_t n = std::size_t(dim);
        spec.module.group = spec.group;
        spec.module.dim = n;
        if (j.contains("basis")) {
            for (const auto& b : j.at("basis")) spec.module.basis_names.push_back(b.get<std::string>());
            if (spec.module.basis_names.size() != n) throw ParseError("basis names do not match dim");
        }
        const auto& action = j.at("action");
        if (!action.is_array() || action.size() != expected_ops(spec.group))
            throw ParseError(spec.group.name() + " needs " + std::to_string(expected_ops(spec.group)) +
                             " action matrices");
        for (const auto& op : action) spec.module.ops.push_back(matrix_field(op, n, n, "action matrix"));
        spec.module.validate();

        if (j.contains("product")) {
            rep::Bilinear b(n, n, n);
            for (const auto& e : j.at("product"))
                b.at(index_field(e, "k", n), index_field(e, "i", n), index_field(e, "j", n)) +=
                    scalar_field(e.at("c"));
            spec.product = b;
        }
        if (j.contains("comultiplication")) {
            Matrix d(n * n, n);
            for (const auto& e : j.at("comultiplication"))
                d(index_field(e, "i", n) * n + index_field(e, "j", n), index_field(e, "k", n)) +=
                    scalar_field(e.at("c"));
            spec.coproduct = d;
        }
        if (!spec.product && !spec.coproduct) throw ParseError("spec needs a product or a comultiplication");

        if (j.contains("summands")) {
            for (const auto& s : j.at("summands")) {
                SpecSummand x{s.at("id").get<std::string>(), std::nullopt, std::nullopt, std::nullopt};
                if (s.contains("hwv")) {
                    if (spec.group.kind != rep::GroupKind::SL2)
                        throw ParseError("highest weight vectors only make sense for SL2");
                    x.hwv = vector_field(s.at("hwv"), n, "hwv");
                } else {
                    x.irrep = irrep_field(s.at("irrep"), spec.group);
                    const auto& tau = s.at("tau");
                    const std::size_t cols = tau.is_array() && !tau.empty() ? tau.front().size() : 0;
                    x.tau = matrix_field(tau, n, cols, "tau");
                }
                for (const auto& prev : spec.summands)
                    if (prev.id == x.id) throw ParseError("duplicate summand id '" + x.id + "'");
                spec.summands.push_back(std::move(x));
            }
        }
        labeling_by_name(spec.group, spec.labeling);
        return spec;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed spec file: ") + ex.what());
    }
}

AlgebraSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open spec file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str());
}

std::string spec_to_json(const AlgebraSpec& spec) {
    const std::size_t n = spec.module.dim;
    ojson j;
    j["group"] = spec.group.name();
    j["labeling"] = spec.labeling;
    j["dim"] = n;
    if (!spec.module.basis_names.empty()) j["basis"] = spec.module.basis_names;
    ojson action = ojson::array();
    for (const auto& op : spec.module.ops) action.push_back(matrix_json(op));
    j["action"] = action;
    if (spec.product) {
        ojson p = ojson::array();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t jj = 0; jj < n; ++jj)
                for (std::size_t k = 0; k < n; ++k)
                    if (spec.product->at(k, i, jj) != 0)
                        p.push_back({{"i", i}, {"j", jj}, {"k", k}, {"c", scalar_json(spec.product->at(k, i, jj))}});
        j["product"] = p;
    }
    if (spec.coproduct) {
        ojson p = ojson::array();
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t jj = 0; jj < n; ++jj)
                    if ((*spec.coproduct)(i * n + jj, k) != 0)
                        p.push_back({{"k", k}, {"i", i}, {"j", jj}, {"c", scalar_json((*spec.coproduct)(i * n + jj, k))}});
        j["comultiplication"] = p;
    }
    if (!spec.summands.empty()) {
        ojson ss = ojson::array();
        for (const auto& s : spec.summands) {
            ojson x;
            x["id"] = s.id;
            if (s.hwv) {
                x["hwv"] = vector_json(*s.hwv);
            } else {
                x["irrep"] = detail::irrep_json(*s.irrep);
                x["tau"] = matrix_json(*s.tau);
            }
            ss.push_back(x);
        }
        j["summands"] = ss;
    }
    return j.dump(2) + "\n";
}

rep::GModule dual_module(const rep::GModule& m) {
    rep::GModule d = m;
    for (std::size_t g = 0; g < m.ops.size(); ++g) {
        if (m.group.derivation_action()) {
            d.ops[g] = m.ops[g].transpose().scaled(-1);
        } else {
            // (12) is an involution and (123) has inverse (123)^2.
            Matrix inv = g == 0 ? m.ops[g] : m.ops[g] * m.ops[g];
            d.ops[g] = inv.transpose();
        }
    }
    return d;
}

GTable extract_from_spec(const AlgebraSpec& spec) {
    if (!spec.product) throw ParseError("spec file has no product");
    auto reg = labeling_by_name(spec.group, spec.labeling);
    auto dec = decompose(spec, spec.module, reg);
    return extract(spec.module, *spec.product, dec, reg);
}

GTable cotable_from_spec(const AlgebraSpec& spec) {
    if (!spec.coproduct) throw ParseError("spec file has no comultiplication");
    auto reg = labeling_by_name(spec.group, spec.labeling);
    auto dual = dual_module(spec.module);
    auto dec = decompose(spec, dual, reg);
    return cotable(dual, *spec.coproduct, dec, reg);
}

std::string decomposition_to_json(const rep::Decomposition& dec) {
    ojson j;
    j["group"] = dec.group.name();
    j["module_dim"] = dec.module_dim;
    ojson ss = ojson::array();
    for (const auto& s : dec.summands) {
        ojson x;
        x["id"] = s.id;
        x["irrep"] = detail::irrep_json(s.irrep);
        if (s.hwv_weight) x["hwv_weight"] = *s.hwv_weight;
        x["tau"] = matrix_json(s.tau);
        ss.push_back(x);
    }
    j["summands"] = ss;
    return j.dump(2) + "\n";
}

}  // namespace gtable
