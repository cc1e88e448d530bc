#include "json_io.hpp"

#include "json.hpp"

#include <sstream>

namespace ncps {

RawStructureConstants raw_structure_constants_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw StructuralError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n"))
        throw StructuralError("structure-constant document needs an \"n\" field");
    RawStructureConstants raw;
    raw.n = doc["n"].get<int>();
    if (raw.n <= 0) throw StructuralError("dimension must be positive");
    if (doc.contains("signature")) {
        for (const auto& s : doc["signature"]) raw.signature.push_back(s.get<int>());
    } else {
        raw.signature = VariableTable::minkowski(raw.n);
    }
    int n = raw.n;
    raw.dense.assign(n * n * n, Rat(0));
    if (doc.contains("C")) {
        for (const auto& entry : doc["C"]) {
            if (!entry.is_array() || entry.size() != 4)
                throw StructuralError("C entries must be [mu, nu, lambda, \"num/den\"]");
            int mu = entry[0].get<int>();
            int nu = entry[1].get<int>();
            int lam = entry[2].get<int>();
            if (mu < 0 || nu < 0 || lam < 0 || mu >= n || nu >= n || lam >= n)
                throw StructuralError("C entry index out of range");
            if (mu >= nu)
                throw StructuralError("C entries must list mu < nu components only");
            Rat v = rat_parse(entry[3].get<std::string>());
            raw.dense[(mu * n + nu) * n + lam] = v;
            raw.dense[(nu * n + mu) * n + lam] = -v;
        }
    }
    return raw;
}

StructureConstants structure_constants_from_json(const std::string& text) {
    auto raw = raw_structure_constants_from_json(text);
    return StructureConstants::validated(raw.n, raw.signature, raw.dense);
}

std::string structure_constants_to_json(const StructureConstants& C) {
    nlohmann::json doc;
    int n = C.dim();
    doc["n"] = n;
    doc["signature"] = C.signature();
    auto entries = nlohmann::json::array();
    for (int mu = 0; mu < n; ++mu)
        for (int nu = mu + 1; nu < n; ++nu)
            for (int lam = 0; lam < n; ++lam) {
                const Rat& v = C.c(mu, nu, lam);
                if (v == 0) continue;
                entries.push_back({mu, nu, lam, rat_text(v)});
            }
    doc["C"] = entries;
    return doc.dump();
}

} // namespace ncps
