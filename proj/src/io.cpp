#include "zinbiel/io.hpp"

#include <fstream>

#include <json.hpp>

namespace zinbiel {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json products_to_json(const std::map<std::pair<int, int>, SparseVec>& products) {
    ordered_json arr = ordered_json::array();
    for (const auto& [ij, sv] : products) {
        ordered_json terms = ordered_json::array();
        for (const auto& t : sv)
            terms.push_back({{"k", t.k}, {"coeff", t.c.str()}});
        arr.push_back({{"i", ij.first}, {"j", ij.second}, {"terms", terms}});
    }
    return arr;
}

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
    throw SchemaError(path + ": " + what);
}

int require_int(const ordered_json& j, const std::string& path) {
    if (!j.is_number_integer())
        schema_fail(path, "expected an integer");
    return j.get<int>();
}

Scalar require_scalar(const ordered_json& j, const std::string& path) {
    if (!j.is_string())
        schema_fail(path, "expected a scalar string");
    try {
        return Scalar::parse(j.get<std::string>());
    } catch (const Error& e) {
        schema_fail(path, e.what());
    }
}

void check_version(const ordered_json& j, const std::string& expected_format) {
    if (!j.is_object())
        throw SchemaError("top level: expected a JSON object");
    if (!j.contains("version"))
        schema_fail("version", "missing");
    if (!j["version"].is_number_integer() || j["version"].get<int>() != kFormatVersion)
        schema_fail("version", "unsupported format version (expected " +
                                   std::to_string(kFormatVersion) + ")");
    if (j.contains("format") && j["format"].get<std::string>() != expected_format)
        schema_fail("format", "expected \"" + expected_format + "\"");
}

std::map<std::pair<int, int>, SparseVec> products_from_json(const ordered_json& arr, int dim,
                                                            const std::string& base) {
    if (!arr.is_array())
        schema_fail(base, "expected an array");
    std::map<std::pair<int, int>, SparseVec> out;
    for (std::size_t idx = 0; idx < arr.size(); ++idx) {
        std::string path = base + "[" + std::to_string(idx) + "]";
        const auto& e = arr[idx];
        if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("terms"))
            schema_fail(path, "expected {i, j, terms}");
        int i = require_int(e["i"], path + ".i");
        int j = require_int(e["j"], path + ".j");
        if (i < 1 || i > dim || j < 1 || j > dim)
            schema_fail(path, "product index out of range 1.." + std::to_string(dim));
        if (out.count({i, j}))
            schema_fail(path, "duplicate product entry");
        SparseVec sv;
        const auto& terms = e["terms"];
        if (!terms.is_array())
            schema_fail(path + ".terms", "expected an array");
        for (std::size_t ti = 0; ti < terms.size(); ++ti) {
            std::string tpath = path + ".terms[" + std::to_string(ti) + "]";
            const auto& t = terms[ti];
            if (!t.is_object() || !t.contains("k") || !t.contains("coeff"))
                schema_fail(tpath, "expected {k, coeff}");
            int k = require_int(t["k"], tpath + ".k");
            if (k < 1 || k > dim)
                schema_fail(tpath + ".k", "coordinate out of range");
            Scalar c = require_scalar(t["coeff"], tpath + ".coeff");
            if (!c.is_zero())
                sv.push_back({k, c});
        }
        std::sort(sv.begin(), sv.end(), [](const Term& a, const Term& b) { return a.k < b.k; });
        for (std::size_t ti = 1; ti < sv.size(); ++ti)
            if (sv[ti].k == sv[ti - 1].k)
                schema_fail(path + ".terms", "duplicate coordinate");
        if (!sv.empty())
            out[{i, j}] = std::move(sv);
    }
    return out;
}

} // namespace

std::string algebra_to_json(const Algebra& a) {
    ordered_json j;
    j["format"] = "zinbiel-algebra";
    j["version"] = kFormatVersion;
    j["dim"] = a.dim;
    j["labels"] = a.labels;
    j["params"] = a.params;
    j["products"] = products_to_json(a.products);
    return j.dump(2) + "\n";
}

Algebra algebra_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("JSON parse error: ") + e.what());
    }
    check_version(j, "zinbiel-algebra");
    Algebra a;
    if (!j.contains("dim"))
        schema_fail("dim", "missing");
    a.dim = require_int(j["dim"], "dim");
    if (a.dim < 1)
        schema_fail("dim", "must be positive");
    if (!j.contains("labels") || !j["labels"].is_array())
        schema_fail("labels", "missing or not an array");
    for (const auto& l : j["labels"])
        a.labels.push_back(l.get<std::string>());
    if (static_cast<int>(a.labels.size()) != a.dim)
        schema_fail("labels", "expected exactly dim entries");
    for (std::size_t i = 0; i < a.labels.size(); ++i)
        for (std::size_t k = i + 1; k < a.labels.size(); ++k)
            if (a.labels[i] == a.labels[k])
                schema_fail("labels", "duplicate label \"" + a.labels[i] + "\"");
    if (j.contains("params")) {
        if (!j["params"].is_array())
            schema_fail("params", "expected an array");
        for (const auto& p : j["params"]) {
            std::string name = p.get<std::string>();
            if (var_index(name) < 0)
                schema_fail("params", "unknown parameter \"" + name + "\"");
            a.params.push_back(name);
        }
    }
    if (!j.contains("products"))
        schema_fail("products", "missing");
    a.products = products_from_json(j["products"], a.dim, "products");

    // declared parameters must cover everything used
    for (const auto& [ij, sv] : a.products) {
        (void)ij;
        for (const auto& t : sv)
            for (int v : t.c.used_params()) {
                std::string name(kVarNames[static_cast<std::size_t>(v)]);
                if (std::find(a.params.begin(), a.params.end(), name) == a.params.end())
                    schema_fail("products", "coefficient uses undeclared parameter \"" + name + "\"");
            }
    }
    return a;
}

void save_algebra(const std::string& path, const Algebra& a) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot open " + path + " for writing");
    out << algebra_to_json(a);
}

Algebra load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return algebra_from_json(text);
}

std::string partial_table_to_json(const PartialTable& t) {
    ordered_json j;
    j["format"] = "zinbiel-partial";
    j["version"] = kFormatVersion;
    j["dim"] = t.dim;
    j["known"] = products_to_json(t.known);
    ordered_json unk = ordered_json::array();
    for (const auto& [i, jj] : t.unknown)
        unk.push_back({i, jj});
    j["unknown"] = unk;
    return j.dump(2) + "\n";
}

PartialTable partial_table_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("JSON parse error: ") + e.what());
    }
    check_version(j, "zinbiel-partial");
    PartialTable t;
    if (!j.contains("dim"))
        schema_fail("dim", "missing");
    t.dim = require_int(j["dim"], "dim");
    if (j.contains("known"))
        t.known = products_from_json(j["known"], t.dim, "known");
    if (j.contains("unknown")) {
        if (!j["unknown"].is_array())
            schema_fail("unknown", "expected an array of [i, j] pairs");
        for (std::size_t idx = 0; idx < j["unknown"].size(); ++idx) {
            const auto& e = j["unknown"][idx];
            std::string path = "unknown[" + std::to_string(idx) + "]";
            if (!e.is_array() || e.size() != 2)
                schema_fail(path, "expected a pair [i, j]");
            t.unknown.insert({require_int(e[0], path), require_int(e[1], path)});
        }
    }
    try {
        t.validate();
    } catch (const Error& e) {
        throw SchemaError(e.what());
    }
    return t;
}

PartialTable load_partial_table(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return partial_table_from_json(text);
}

std::string graded_to_json(const GradedAlgebra& g) {
    ordered_json j;
    j["format"] = "zinbiel-graded";
    j["version"] = kFormatVersion;
    j["dim"] = g.algebra.dim;
    j["labels"] = g.algebra.labels;
    j["params"] = g.algebra.params;
    std::vector<int> degs(g.degrees.begin() + 1, g.degrees.end());
    j["degrees"] = degs;
    j["component_dims"] = g.component_dims;
    j["products"] = products_to_json(g.algebra.products);
    return j.dump(2) + "\n";
}

std::string certificate_to_json(const NonexistenceReport& r, bool checked) {
    ordered_json j;
    j["format"] = "zinbiel-nonexistence";
    j["version"] = kFormatVersion;
    j["p"] = r.p;
    j["det"] = r.det.str();
    j["rank"] = r.rank;
    j["infeasible"] = r.infeasible;
    ordered_json farkas = ordered_json::array();
    for (const auto& y : r.farkas)
        farkas.push_back(y.str());
    j["farkas"] = farkas;
    j["statement"] = r.statement;
    j["combination_checked"] = checked;
    return j.dump(2) + "\n";
}

} // namespace zinbiel
