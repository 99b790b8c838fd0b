#include "gtable/gtable.hpp"

#include "json_util.hpp"

#include <set>
#include <sstream>

namespace gtable {

namespace detail {

ojson irrep_json(const rep::IrrepId& id) {
    ojson j;
    j["group"] = id.group.name();
    if (id.group.kind == rep::GroupKind::SL2)
        j["label"] = id.label;
    else
        j["label"] = id.label_name();
    return j;
}

rep::IrrepId irrep_from_json(const ojson& j) {
    rep::Group g = rep::Group::parse(j.at("group").get<std::string>());
    const auto& label = j.at("label");
    switch (g.kind) {
        case rep::GroupKind::SL2: {
            int n = label.get<int>();
            if (n < 0) throw ParseError("negative highest weight");
            return {g, n};
        }
        case rep::GroupKind::GL: {
            auto s = label.get<std::string>();
            if (s == "trivial") return {g, rep::kTrivial};
            if (s == "adjoint") return {g, rep::kAdjoint};
            break;
        }
        case rep::GroupKind::S3: {
            auto s = label.get<std::string>();
            if (s == "tr") return {g, rep::kTr};
            if (s == "sg") return {g, rep::kSg};
            if (s == "std") return {g, rep::kStd};
            break;
        }
    }
    throw ParseError("invalid irrep label for " + g.name());
}

}  // namespace detail

using detail::irrep_from_json;
using detail::irrep_json;
using detail::ojson;

Format parse_format(std::string_view name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "latex") return Format::Latex;
    throw ParseError("unknown format '" + std::string(name) + "'");
}

namespace {

std::set<rep::Triple> multi_q_triples(const GTable& t) {
    std::set<rep::Triple> out;
    for (const auto& [key, cell] : t.entries())
        for (const auto& e : cell)
            if (e.q > 1) out.insert({t.source()[key.first].irrep, t.source()[key.second].irrep, t.target()[e.s].irrep});
    return out;
}

std::string coefficient_text(const Scalar& a, bool latex) {
    if (a == 1) return "";
    if (!latex || a.get_den() == 1) return la::to_string(a) + " ";
    return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}\\,";
}

std::string cell_text_impl(const GTable& t, std::size_t r1, std::size_t r2, bool latex,
                           const std::set<rep::Triple>& multi) {
    std::string out;
    bool first = true;
    for (const auto& e : t.cell(r1, r2)) {
        Scalar a = abs(e.c);
        out += first ? (e.c < 0 ? "-" : "") : (e.c < 0 ? " - " : " + ");
        first = false;
        out += coefficient_text(a, latex);
        std::string label = t.target()[e.s].id;
        if (multi.count({t.source()[r1].irrep, t.source()[r2].irrep, t.target()[e.s].irrep}))
            label = latex ? "{" + label + "}^{(" + std::to_string(e.q) + ")}"
                          : label + "[" + std::to_string(e.q) + "]";
        out += label;
    }
    return out;
}

std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++w;
    return w;
}

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w - display_width(s), ' '); }

std::string render_text(const GTable& t, std::string_view op) {
    const auto multi = multi_q_triples(t);
    const std::size_t n = t.source().size();
    std::vector<std::vector<std::string>> grid(n + 1, std::vector<std::string>(n + 1));
    grid[0][0] = std::string(op);
    for (std::size_t r = 0; r < n; ++r) {
        grid[0][r + 1] = t.source()[r].id;
        grid[r + 1][0] = t.source()[r].id;
        for (std::size_t c = 0; c < n; ++c) grid[r + 1][c + 1] = cell_text_impl(t, r, c, false, multi);
    }
    std::vector<std::size_t> width(n + 1, 0);
    for (const auto& row : grid)
        for (std::size_t c = 0; c <= n; ++c) width[c] = std::max(width[c], display_width(row[c]));
    std::ostringstream os;
    for (std::size_t r = 0; r <= n; ++r) {
        std::string line;
        for (std::size_t c = 0; c <= n; ++c) {
            if (c) line += c == 1 ? " || " : " | ";
            line += pad(grid[r][c], width[c]);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
        if (r == 0) {
            std::string rule;
            for (std::size_t c = 0; c <= n; ++c) {
                if (c) rule += c == 1 ? "=||=" : "=|=";
                rule += std::string(width[c], '=');
            }
            os << rule << '\n';
        }
    }
    return os.str();
}

std::string render_latex(const GTable& t, std::string_view op) {
    const auto multi = multi_q_triples(t);
    const std::size_t n = t.source().size();
    std::ostringstream os;
    os << "\\begin{tabular}{|c||";
    for (std::size_t c = 0; c < n; ++c) os << "c|";
    os << "}\n\\hline\n";
    std::string symbol = op == "·" ? "\\cdot" : op == "{,}" ? "\\{-,-\\}" : std::string(op);
    os << "$" << symbol << "$";
    for (const auto& s : t.source()) os << " & $" << s.id << "$";
    os << " \\\\\n\\hline\\hline\n";
    for (std::size_t r = 0; r < n; ++r) {
        os << "$" << t.source()[r].id << "$";
        for (std::size_t c = 0; c < n; ++c) {
            std::string cell = cell_text_impl(t, r, c, true, multi);
            os << " &";
            if (!cell.empty()) os << " $" << cell << "$";
        }
        os << " \\\\\n\\hline\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

ojson summands_json(const std::vector<SummandInfo>& s) {
    ojson arr = ojson::array();
    for (const auto& x : s) {
        ojson j;
        j["id"] = x.id;
        j["irrep"] = irrep_json(x.irrep);
        if (x.hwv_weight) j["hwv_weight"] = *x.hwv_weight;
        arr.push_back(j);
    }
    return arr;
}

std::vector<SummandInfo> summands_from_json(const ojson& arr) {
    std::vector<SummandInfo> out;
    for (const auto& j : arr) {
        SummandInfo s{j.at("id").get<std::string>(), irrep_from_json(j.at("irrep")), std::nullopt};
        if (j.contains("hwv_weight")) s.hwv_weight = j.at("hwv_weight").get<int>();
        for (const auto& prev : out)
            if (prev.id == s.id) throw ParseError("duplicate summand id '" + s.id + "'");
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

std::string cell_text(const GTable& t, std::size_t r1, std::size_t r2, bool latex) {
    return cell_text_impl(t, r1, r2, latex, multi_q_triples(t));
}

std::string to_json(const GTable& t) {
    ojson j;
    j["group"] = t.group().name();
    j["labeling"] = t.labeling();
    j["summands"] = summands_json(t.source());
    if (t.target() != t.source()) j["target_summands"] = summands_json(t.target());
    ojson entries = ojson::array();
    for (const auto& [key, cell] : t.entries())
        for (const auto& e : cell) {
            ojson x;
            x["r1"] = t.source()[key.first].id;
            x["r2"] = t.source()[key.second].id;
            x["s"] = t.target()[e.s].id;
            x["q"] = e.q;
            x["c"] = la::to_string(e.c);
            entries.push_back(x);
        }
    j["entries"] = entries;
    return j.dump(2) + "\n";
}

GTable parse_json(std::string_view text) {
    try {
        ojson j = ojson::parse(text);
        rep::Group g = rep::Group::parse(j.at("group").get<std::string>());
        auto source = summands_from_json(j.at("summands"));
        auto target = j.contains("target_summands") ? summands_from_json(j.at("target_summands")) : source;
        for (const auto& s : source)
            if (s.irrep.group != g) throw ParseError("summand '" + s.id + "' belongs to another group");
        GTable t(g, j.at("labeling").get<std::string>(), source, target);
        for (const auto& e : j.at("entries")) {
            int q = e.at("q").get<int>();
            if (q < 1) throw ParseError("intertwiner index must be positive");
            Scalar c = la::parse_scalar(e.at("c").get<std::string>());
            if (c == 0) throw ParseError("zero coefficients are not stored");
            t.add(t.source_index(e.at("r1").get<std::string>()), t.source_index(e.at("r2").get<std::string>()),
                  t.target_index(e.at("s").get<std::string>()), q, c);
        }
        return t;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed table JSON: ") + ex.what());
    }
}

std::string render(const GTable& t, Format format, std::string_view op_symbol) {
    switch (format) {
        case Format::Text: return render_text(t, op_symbol);
        case Format::Json: return to_json(t);
        case Format::Latex: return render_latex(t, op_symbol);
    }
    return {};
}

}  // namespace gtable
