#include "dt4/json_io.hpp"

#include <fstream>

namespace dt4 {

json partition_to_json(const DPartition& pi) {
    json cells = json::array();
    for (const auto& c : pi.cells()) cells.push_back(c);
    return json{{"dim", pi.dim()}, {"cells", cells}};
}

DPartition partition_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("cells"))
        throw ParseError("partition JSON needs \"dim\" and \"cells\"");
    int dim = j.at("dim").get<int>();
    std::vector<DPartition::Cell> cells;
    for (const auto& c : j.at("cells")) cells.push_back(c.get<DPartition::Cell>());
    return DPartition::from_cells(dim, cells);
}

json char_to_json(const LaurentChar& chi) {
    json out = json::array();
    for (const auto& [e, m] : chi.terms()) {
        json exp = json::array();
        for (int i = 0; i < chi.rank(); ++i) exp.push_back(e[i]);
        out.push_back(json{{"exp", exp}, {"mult", int_to_long(m)}});
    }
    return out;
}

namespace {

json rat_coeff(const Rat& c) { return rat_to_string(c); }

json poly1_coeff(const Poly1& p) {
    // Dense coefficient array [a0, a1, ...] as decimal strings.
    json out = json::array();
    int deg = p.is_zero() ? 0 : p.terms().rbegin()->first[0];
    for (int k = 0; k <= deg; ++k) out.push_back(rat_to_string(p.coeff({k})));
    return out;
}

json poly4_coeff(const Poly4& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back(json::array({e, rat_to_string(c)}));
    return out;
}

template <typename R, typename Render>
json factored_impl(const FactoredValue<R>& f, Render render) {
    json factors = json::array();
    for (const auto& [form, e] : f.factors) {
        json coeffs = json::array();
        for (int i = 0; i < 3; ++i) coeffs.push_back(render(form.c[i]));
        factors.push_back(json{{"form", coeffs}, {"exp", e}});
    }
    return json{{"scalar", rat_to_string(f.scalar)}, {"factors", factors}};
}

}  // namespace

json factored_to_json(const FactoredValue<Rat>& f) {
    return factored_impl(f, rat_coeff);
}
json factored_to_json(const FactoredValue<Poly1>& f) {
    return factored_impl(f, poly1_coeff);
}
json factored_to_json(const FactoredValue<Poly4>& f) {
    return factored_impl(f, poly4_coeff);
}

FactoredValue<Rat> factored_rat_from_json(const json& j) {
    FactoredValue<Rat> out;
    out.scalar = rat_from_string(j.at("scalar").get<std::string>());
    if (out.scalar == 0) return FactoredValue<Rat>::zero();
    for (const auto& fj : j.at("factors")) {
        LinearForm<Rat> form;
        const auto& coeffs = fj.at("form");
        for (int i = 0; i < 3; ++i)
            form.c[i] = rat_from_string(coeffs.at(i).get<std::string>());
        out.mul_form(std::move(form), fj.at("exp").get<int>());
    }
    return out;
}

json poly1_to_json(const Poly1& p) { return poly1_coeff(p); }

json limit_to_json(const SpecializedLimit& lim) {
    json factors = json::array();
    for (const auto& [p, e] : lim.factors)
        factors.push_back(json{{"poly", poly1_coeff(p)}, {"exp", e}});
    return json{{"scalar", rat_to_string(lim.scalar)}, {"factors", factors}};
}

json series_to_json(const TruncatedSeries<Rat>& s) {
    return series_to_json_with(s, rat_coeff);
}

void save_signs(const SignAssignment& signs, const std::string& path) {
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw Error("cannot open " + path + " for writing");
    for (const auto& [key, sign] : signs.signs) {
        auto prov = signs.provenance.find(key);
        json line{{"key", key},
                  {"sign", sign},
                  {"provenance",
                   prov == signs.provenance.end() ? "user-supplied" : prov->second}};
        os << line.dump() << '\n';
    }
}

SignAssignment load_signs(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ParseError("cannot open sign file " + path);
    SignAssignment out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded()) throw ParseError("bad sign file line: " + line);
        int sign = j.at("sign").get<int>();
        if (sign != 1 && sign != -1) throw ParseError("sign must be 1 or -1");
        out.set(j.at("key").get<std::string>(), sign,
                j.value("provenance", "user-supplied"));
    }
    return out;
}

std::vector<ToricChart> load_charts(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ParseError("cannot open chart file " + path);
    json j = json::parse(is, nullptr, false);
    if (j.is_discarded()) throw ParseError("chart file is not valid JSON");
    std::vector<ToricChart> out;
    for (const auto& cj : j.at("charts")) {
        ToricChart c{};
        const auto& tg = cj.at("tangent");
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) c.tangent[i][k] = tg.at(i).at(k).get<int>();
        for (int k = 0; k < 4; ++k) c.bundle[k] = cj.at("bundle").at(k).get<int>();
        c.validate();
        out.push_back(c);
    }
    return out;
}

}  // namespace dt4
