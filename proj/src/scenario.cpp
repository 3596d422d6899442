#include "angelesco/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace angelesco {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("scenario: " + msg);
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

long parse_long(const std::string& key, const std::string& tok) {
    size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(tok, &pos);
    } catch (const std::exception&) {
        fail("key '" + key + "': '" + tok + "' is not an integer");
    }
    if (pos != tok.size()) {
        fail("key '" + key + "': '" + tok + "' is not an integer");
    }
    return v;
}

real_t parse_real(const std::string& key, const std::string& tok) {
    if (tok.empty()) fail("key '" + key + "': empty number");
    try {
        return real_t(tok);
    } catch (const std::exception&) {
        fail("key '" + key + "': '" + tok + "' is not a number");
    }
}

}  // namespace

MultiIndex Scenario::index_for(int N) const {
    if (c.empty()) fail("index_for needs ray.c");
    if (N < 0) fail("index_for needs a nonnegative total");
    real_t S = 0;
    for (const real_t& ci : c) S += ci;
    const int d = static_cast<int>(c.size());
    MultiIndex n(d, 0);
    std::vector<real_t> frac(d);
    int assigned = 0;
    for (int i = 0; i < d; ++i) {
        real_t t = N * c[i] / S;
        real_t fl = floor(t);
        n[i] = fl.convert_to<int>();
        frac[i] = t - fl;
        assigned += n[i];
    }
    std::vector<int> order(d);
    for (int i = 0; i < d; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return frac[a] > frac[b]; });
    for (int r = 0; r < N - assigned; ++r) ++n[order[r]];
    return n;
}

Scenario parse_scenario(const std::string& text, const ScenarioOverrides& ov) {
    // pass 1: raw ordered pairs
    std::vector<std::pair<std::string, std::string>> pairs;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) {
            fail("line " + std::to_string(lineno) + ": expected 'key = value'");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail("line " + std::to_string(lineno) + ": empty key");
        if (!seen.insert(key).second) fail("duplicate key '" + key + "'");
        pairs.emplace_back(key, value);
    }
    std::map<std::string, std::string> kv(pairs.begin(), pairs.end());
    auto get = [&](const std::string& key) -> const std::string* {
        auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };

    // precision first: numeric parsing below happens at the final precision
    Scenario sc;
    if (const std::string* v = get("precision.bits")) {
        sc.precision_bits = static_cast<unsigned>(parse_long("precision.bits", *v));
    }
    if (ov.precision_bits) sc.precision_bits = *ov.precision_bits;
    if (sc.precision_bits < 32 || sc.precision_bits > 8192) {
        fail("precision.bits out of range [32, 8192]");
    }
    set_working_precision(sc.precision_bits);

    std::set<std::string> known = {"system.d",     "ray.c", "ray.schedule",
                                   "z-points",     "tol",   "precision.bits",
                                   "grid.n"};
    int d = 0;
    if (const std::string* v = get("system.d")) {
        d = static_cast<int>(parse_long("system.d", *v));
        if (d < 1 || d > 16) fail("system.d out of range [1, 16]");
    }
    for (int i = 1; i <= d; ++i) {
        const std::string base = "system." + std::to_string(i);
        known.insert({base + ".interval", base + ".weight.ga",
                      base + ".weight.gb", base + ".weight.A"});
        WeightSpec w;
        const std::string* iv = get(base + ".interval");
        if (!iv) fail("missing key '" + base + ".interval'");
        std::vector<std::string> ab = split_ws(*iv);
        if (ab.size() != 2) fail("key '" + base + ".interval': need two endpoints");
        real_t a = parse_real(base + ".interval", ab[0]);
        real_t b = parse_real(base + ".interval", ab[1]);
        if (!(a < b)) fail("key '" + base + ".interval': endpoints out of order");
        w.iv = Interval(a, b);
        if (const std::string* g = get(base + ".weight.ga")) {
            w.ga = parse_real(base + ".weight.ga", *g);
        }
        if (const std::string* g = get(base + ".weight.gb")) {
            w.gb = parse_real(base + ".weight.gb", *g);
        }
        if (const std::string* g = get(base + ".weight.A")) {
            for (const std::string& t : split_ws(*g)) {
                w.A.push_back(parse_real(base + ".weight.A", t));
            }
        }
        sc.system.weights.push_back(std::move(w));
    }
    if (sc.has_system()) {
        sc.system.validate();
    } else {
        for (const auto& [key, value] : pairs) {
            if (key.rfind("system.", 0) == 0) {
                fail("key '" + key + "' requires system.d");
            }
        }
    }

    if (const std::string* v = get("ray.c")) {
        if (!sc.has_system()) fail("ray.c requires a system");
        std::vector<std::string> ts = split_ws(*v);
        if (static_cast<int>(ts.size()) != d) {
            fail("ray.c: need exactly system.d entries");
        }
        for (const std::string& t : ts) {
            real_t ci = parse_real("ray.c", t);
            if (!(ci > 0)) fail("ray.c: entries must be positive");
            sc.c.push_back(ci);
        }
    }
    if (const std::string* v = get("ray.schedule")) {
        if (!sc.has_ray()) fail("ray.schedule requires ray.c");
        for (const std::string& t : split_ws(*v)) {
            long N = parse_long("ray.schedule", t);
            if (N < 1) fail("ray.schedule: totals must be positive");
            if (!sc.schedule.empty() && N <= sc.schedule.back()) {
                fail("ray.schedule: totals must be strictly increasing");
            }
            sc.schedule.push_back(static_cast<int>(N));
        }
    }
    if (const std::string* v = get("z-points")) {
        std::vector<std::string> ts = split_ws(*v);
        if (ts.size() % 2 != 0) fail("z-points: need re im pairs");
        for (size_t k = 0; k + 1 < ts.size(); k += 2) {
            sc.z_points.emplace_back(parse_real("z-points", ts[k]),
                                     parse_real("z-points", ts[k + 1]));
        }
    }
    if (const std::string* v = get("grid.n")) {
        long g = parse_long("grid.n", *v);
        if (g < 8 || g > 4096) fail("grid.n out of range [8, 4096]");
        sc.grid_n = static_cast<int>(g);
    }
    if (ov.grid_n) sc.grid_n = *ov.grid_n;
    if (const std::string* v = get("tol")) {
        sc.tol = parse_real("tol", *v);
        if (sc.tol < 0) fail("tol must be nonnegative");
    }
    if (ov.tol) sc.tol = parse_real("tol", *ov.tol);

    for (const auto& [key, value] : pairs) {
        if (!known.count(key)) fail("unknown key '" + key + "'");
    }
    sc.entries = std::move(pairs);
    return sc;
}

Scenario load_scenario(const std::string& path, const ScenarioOverrides& ov) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), ov);
}

}  // namespace angelesco
