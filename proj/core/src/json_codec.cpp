#include "casimir/json_codec.hpp"

#include "casimir/error.hpp"

namespace casimir {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

}  // namespace

json to_json(const Scalar& s) { return s.str(); }

json to_json(const Form& f) {
    json arr = json::array();
    for (const auto& [b, c] : f.terms()) arr.push_back({{"idx", b.indices()}, {"c", c.str()}});
    return arr;
}

json to_json(const std::vector<Scalar>& multiset) {
    json arr = json::array();
    for (const auto& s : multiset) arr.push_back(s.str());
    return arr;
}

json to_json(const Matrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back({m(r, c).re().str(), m(r, c).im().str()});
        rows.push_back(row);
    }
    return rows;
}

Scalar scalar_from_json(const json& j) {
    if (!j.is_string()) bad("scalar values must be strings in the catalog grammar");
    return Scalar::parse(j.get<std::string>());
}

Form form_from_json(const json& j, int dim) {
    if (!j.is_array()) bad("forms must be arrays of blades");
    Form f(dim);
    for (const auto& blade : j) {
        const json& idx = field(blade, "idx");
        if (!idx.is_array()) bad("blade \"idx\" must be an array");
        std::vector<int> v;
        for (const auto& k : idx) {
            if (!k.is_number_integer()) bad("blade indices must be integers");
            v.push_back(k.get<int>());
        }
        for (std::size_t a = 1; a < v.size(); ++a)
            if (v[a] <= v[a - 1]) bad("blade indices must be strictly increasing");
        for (int k : v)
            if (k < 1 || k > dim) bad("blade index out of range");
        f.add(IndexBlade::from_indices(v), scalar_from_json(field(blade, "c")));
    }
    return f;
}

std::vector<Scalar> multiset_from_json(const json& j) {
    if (!j.is_array()) bad("multisets must be arrays of scalar strings");
    std::vector<Scalar> out;
    for (const auto& v : j) out.push_back(scalar_from_json(v));
    return out;
}

MetricReductiveAlgebra lie_from_json(const json& j) {
    const int dim_m = int_field(j, "dim_m");
    const int dim_h = j.contains("dim_h") ? int_field(j, "dim_h") : 0;
    std::vector<Bracket> brackets;
    if (j.contains("brackets")) {
        for (const auto& b : j.at("brackets")) {
            Bracket br{int_field(b, "i"), int_field(b, "j"), {}};
            for (const auto& o : field(b, "out")) br.out.emplace_back(int_field(o, "k"), scalar_from_json(field(o, "c")));
            brackets.push_back(std::move(br));
        }
    }
    return MetricReductiveAlgebra(dim_m, dim_h, brackets);
}

json lie_to_json(const MetricReductiveAlgebra& L) {
    json brackets = json::array();
    for (const auto& b : L.brackets()) {
        json out = json::array();
        for (const auto& [k, c] : b.out) out.push_back({{"k", k}, {"c", c.str()}});
        brackets.push_back({{"i", b.i}, {"j", b.j}, {"out", out}});
    }
    return {{"dim_m", L.dim_m()}, {"dim_h", L.dim_h()}, {"brackets", brackets}};
}

ParsedGeometry geometry_from_json(const json& j) {
    ParsedGeometry out;
    GeometryRecord& g = out.record;
    const json& name = field(j, "name");
    if (!name.is_string()) bad("\"name\" must be a string");
    g.name = name.get<std::string>();
    g.n = int_field(j, "dim");
    if (g.n < 3 || g.n > kMaxDim) bad("\"dim\" must lie in 3..8");
    g.torsion = form_from_json(field(j, "torsion"), g.n);
    if (j.contains("lie")) g.lie = lie_from_json(j.at("lie"));
    auto from_lie = [&](const char* key) {
        const json& v = j.at(key);
        return v.is_string() && v.get<std::string>() == "lie";
    };
    if (j.contains("dtorsion") && !from_lie("dtorsion")) g.dtorsion = form_from_json(j.at("dtorsion"), g.n);
    if (j.contains("scal_g") && !from_lie("scal_g")) g.scal_g = scalar_from_json(j.at("scal_g"));
    if (j.contains("scal_g") && from_lie("scal_g") && !g.lie) bad("\"scal_g\": \"lie\" requires Lie data");
    if (j.contains("dtorsion") && from_lie("dtorsion") && !g.lie) bad("\"dtorsion\": \"lie\" requires Lie data");
    g.deltatorsion = j.contains("deltatorsion") ? form_from_json(j.at("deltatorsion"), g.n) : Form(g.n);
    if (j.contains("flags")) {
        const json& f = j.at("flags");
        g.flags.parallel_torsion = f.value("parallel_torsion", false);
        g.flags.naturally_reductive = f.value("naturally_reductive", false);
    }
    if (j.contains("expected")) {
        if (!j.at("expected").is_object()) bad("\"expected\" must be an object");
        out.expected = j.at("expected");
    }
    g.validate();
    return out;
}

}  // namespace casimir
