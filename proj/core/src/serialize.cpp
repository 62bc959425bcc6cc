#include "modpoly/serialize.hpp"

#include <fstream>

#include "json.hpp"

#include "modpoly/errors.hpp"

namespace modpoly {

using ordered_json = nlohmann::ordered_json;

std::string PolynomialFile::to_json() const {
    ordered_json j;
    j["invariant"] = invariant;
    j["level"] = level;
    j["group"] = group;
    j["order"] = order;
    ordered_json arr = ordered_json::array();
    for (const auto& [k, c] : coeffs.terms()) {
        ordered_json t;
        t["i"] = k.first;
        t["j"] = k.second;
        t["c"] = c.get_str();
        arr.push_back(std::move(t));
    }
    j["coeffs"] = std::move(arr);
    ordered_json meta;
    meta["primes"] = primes;
    meta["backends"] = backends;
    meta["seed"] = seed;
    meta["tool_version"] = tool_version;
    j["meta"] = std::move(meta);
    return j.dump(1) + "\n";
}

PolynomialFile PolynomialFile::from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad polynomial file: ") + e.what());
    }
    PolynomialFile f;
    try {
        f.invariant = j.at("invariant").get<std::string>();
        f.level = j.at("level").get<std::uint64_t>();
        f.group = j.at("group").get<std::string>();
        f.order = j.at("order").get<std::uint64_t>();
        for (const auto& t : j.at("coeffs")) {
            unsigned i = t.at("i").get<unsigned>();
            unsigned jj = t.at("j").get<unsigned>();
            Integer c = int_from_string(t.at("c").get<std::string>());
            if (c == 0) throw ParseError("zero coefficient stored");
            if (f.coeffs.get(i, jj) != 0) throw ParseError("duplicate coefficient key");
            f.coeffs.set(i, jj, c);
        }
        const auto& meta = j.at("meta");
        f.primes = meta.at("primes").get<std::vector<std::uint64_t>>();
        f.backends = meta.at("backends").get<std::vector<std::string>>();
        f.seed = meta.at("seed").get<std::uint64_t>();
        f.tool_version = meta.at("tool_version").get<std::string>();
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad polynomial file: ") + e.what());
    }
    return f;
}

void PolynomialFile::write(const std::filesystem::path& path) const {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw Error("cannot open " + tmp.string());
        os << to_json();
    }
    fs::rename(tmp, path);
}

PolynomialFile PolynomialFile::read(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ParseError("cannot open " + path.string());
    std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    return from_json(text);
}

std::string modp_to_json(const ModpResult& r) {
    ordered_json j;
    j["prime"] = r.prime;
    j["invariant"] = r.invariant;
    j["ell"] = r.ell;
    j["backend"] = r.backend;
    j["grid"] = r.grid;
    return j.dump() + "\n";
}

ModpResult modp_from_json(const std::string& text) {
    try {
        ordered_json j = ordered_json::parse(text);
        ModpResult r;
        r.prime = j.at("prime").get<std::uint64_t>();
        r.invariant = j.at("invariant").get<std::string>();
        r.ell = j.at("ell").get<std::uint64_t>();
        r.backend = j.at("backend").get<std::string>();
        r.grid = j.at("grid").get<std::vector<std::vector<std::uint64_t>>>();
        return r;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad modp cache entry: ") + e.what());
    }
}

} // namespace modpoly
