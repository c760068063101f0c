#include "gpp/model.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "gpp/errors.hpp"

namespace gpp {

using nlohmann::json;

bool Language::simple() const {
    for (const auto& [id, p] : predicates)
        if (p.is_extensional())
            return false;
    return true;
}

int Language::l_max() const {
    int m = 0;
    for (const auto& [id, p] : predicates)
        m = std::max(m, p.arity());
    return m;
}

int Language::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < predicates.size(); ++i)
        if (predicates[i].first == id)
            return static_cast<int>(i);
    return -1;
}

std::vector<Predicate> Language::predicate_set() const {
    std::vector<Predicate> out;
    out.reserve(predicates.size());
    for (const auto& [id, p] : predicates)
        out.push_back(p);
    return out;
}

double Instance::evaluate_energy(const Word& x) const {
    if (x.length() != n)
        throw ValidationError("word length does not match the instance length");
    double total = 0.0;
    for (const auto& [key, energy] : weights) {
        const auto& [pred_index, start] = key;
        const Predicate& p = language.predicates[pred_index].second;
        const int k = p.arity();
        std::span<const Letter> window(x.letters.data() + (start - 1),
                                       static_cast<std::size_t>(k));
        if (p.contains(window))
            total += energy.value;
    }
    return total;
}

BigRational Instance::evaluate_energy_exact(const Word& x) const {
    if (x.length() != n)
        throw ValidationError("word length does not match the instance length");
    BigRational total = 0;
    for (const auto& [key, energy] : weights) {
        const auto& [pred_index, start] = key;
        const Predicate& p = language.predicates[pred_index].second;
        const int k = p.arity();
        std::span<const Letter> window(x.letters.data() + (start - 1),
                                       static_cast<std::size_t>(k));
        if (p.contains(window))
            total += energy.exact;
    }
    return total;
}

bool Instance::all_weights_nonpositive() const {
    for (const auto& [key, energy] : weights)
        if (energy.value > 0.0)
            return false;
    return true;
}

namespace {

[[noreturn]] void bad(const std::string& message, const std::string& path) {
    throw ValidationError(message, path);
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ValidationError("input is not well-formed JSON");
    return j;
}

Language language_from_json(const json& j, const std::string& root) {
    if (!j.is_object())
        bad("language must be a JSON object", root);
    if (!j.contains("domain") || !j["domain"].is_object() || !j["domain"].contains("size") ||
        !j["domain"]["size"].is_number_integer())
        bad("language requires a domain object with an integer size", root + "/domain");
    const int size = j["domain"]["size"].get<int>();
    if (size < 1)
        bad("domain size must be >= 1", root + "/domain/size");
    std::vector<std::string> labels;
    if (j["domain"].contains("labels")) {
        for (const auto& l : j["domain"]["labels"])
            labels.push_back(l.get<std::string>());
    }
    Domain domain;
    try {
        domain = Domain(size, std::move(labels));
    } catch (const ValidationError& e) {
        bad(e.what(), root + "/domain");
    }

    if (!j.contains("kind") || !j["kind"].is_string())
        bad("language requires a kind of \"simple\" or \"extensional\"", root + "/kind");
    const std::string kind = j["kind"].get<std::string>();
    if (kind != "simple" && kind != "extensional")
        bad("language kind must be \"simple\" or \"extensional\"", root + "/kind");

    if (!j.contains("predicates") || !j["predicates"].is_array())
        bad("language requires a predicates array", root + "/predicates");

    Language lang;
    lang.domain = domain;
    std::unordered_set<std::string> ids;
    std::unordered_set<std::string> keys;
    int index = 0;
    for (const auto& entry : j["predicates"]) {
        const std::string path = root + "/predicates/" + std::to_string(index++);
        if (!entry.is_object() || !entry.contains("id") || !entry["id"].is_string())
            bad("predicate entry requires a string id", path);
        const std::string id = entry["id"].get<std::string>();
        if (!ids.insert(id).second)
            bad("duplicate predicate id: " + id, path + "/id");

        Predicate p = Predicate::bottom();
        if (entry.contains("factors")) {
            if (!entry["factors"].is_array() || entry["factors"].empty())
                bad("factors must be a nonempty array of letter arrays", path + "/factors");
            std::vector<LetterSet> factors;
            int fi = 0;
            for (const auto& factor : entry["factors"]) {
                const std::string fpath = path + "/factors/" + std::to_string(fi++);
                if (!factor.is_array() || factor.empty())
                    bad("factor must be a nonempty letter array", fpath);
                LetterSet set(size);
                for (const auto& letter : factor) {
                    if (!letter.is_number_integer())
                        bad("letters must be integers", fpath);
                    const int a = letter.get<int>();
                    if (a < 1 || a > size)
                        bad("letter out of domain range", fpath);
                    set.insert(a);
                }
                factors.push_back(std::move(set));
            }
            p = Predicate::simple(std::move(factors));
            if (kind == "extensional")
                p = to_extensional(p);
        } else if (entry.contains("tuples")) {
            if (kind != "extensional")
                bad("tuple predicates require language kind \"extensional\"", path);
            if (!entry.contains("arity") || !entry["arity"].is_number_integer())
                bad("tuple predicate requires an integer arity", path + "/arity");
            const int arity = entry["arity"].get<int>();
            if (arity < 1)
                bad("arity must be >= 1", path + "/arity");
            if (!entry["tuples"].is_array() || entry["tuples"].empty())
                bad("tuples must be a nonempty array", path + "/tuples");
            std::vector<LetterTuple> tuples;
            int ti = 0;
            for (const auto& t : entry["tuples"]) {
                const std::string tpath = path + "/tuples/" + std::to_string(ti++);
                if (!t.is_array() || static_cast<int>(t.size()) != arity)
                    bad("tuple length must equal the declared arity", tpath);
                LetterTuple tuple;
                for (const auto& letter : t) {
                    if (!letter.is_number_integer())
                        bad("letters must be integers", tpath);
                    const int a = letter.get<int>();
                    if (a < 1 || a > size)
                        bad("letter out of domain range", tpath);
                    tuple.push_back(a);
                }
                tuples.push_back(std::move(tuple));
            }
            p = Predicate::extensional(size, arity, std::move(tuples));
        } else {
            bad("predicate entry requires factors or tuples", path);
        }

        if (!keys.insert(p.key()).second)
            bad("duplicate predicate (same relation as an earlier entry)", path);
        lang.predicates.emplace_back(id, std::move(p));
    }
    return lang;
}

Energy energy_from_json(const json& value, const std::string& path) {
    if (!value.is_number())
        bad("weight must be a number", path);
    const double d = value.get<double>();
    // dump() re-prints the shortest decimal that round-trips, which is the
    // numeral the file carried for ordinary inputs; the exact carrier reads
    // that decimal.
    return Energy(d, parse_decimal_rational(value.dump()));
}

Instance instance_from_json(const json& j, const std::string& base_dir) {
    if (!j.is_object())
        bad("instance must be a JSON object", "");
    if (!j.contains("language"))
        bad("instance requires a language", "/language");

    Language lang;
    if (j["language"].is_object() && j["language"].contains("path")) {
        const std::string rel = j["language"]["path"].get<std::string>();
        const std::filesystem::path full = std::filesystem::path(base_dir) / rel;
        lang = parse_language_file(full.string());
    } else {
        lang = language_from_json(j["language"], "/language");
    }

    if (!j.contains("n") || !j["n"].is_number_integer())
        bad("instance requires an integer n", "/n");
    const long long n = j["n"].get<long long>();
    if (n < 0)
        bad("n must be >= 0", "/n");

    Instance inst;
    inst.language = std::move(lang);
    inst.n = n;

    if (!j.contains("constraints"))
        return inst;
    if (!j["constraints"].is_array())
        bad("constraints must be an array", "/constraints");

    int ci = 0;
    for (const auto& c : j["constraints"]) {
        const std::string path = "/constraints/" + std::to_string(ci++);
        if (!c.is_object())
            bad("constraint must be an object", path);
        if (!c.contains("pred") || !c["pred"].is_string())
            bad("constraint requires a pred id", path + "/pred");
        const std::string id = c["pred"].get<std::string>();
        const int pred_index = inst.language.index_of(id);
        if (pred_index < 0)
            bad("unknown predicate id: " + id, path + "/pred");
        if (!c.contains("weight"))
            bad("constraint requires a weight", path + "/weight");
        const Energy energy = energy_from_json(c["weight"], path + "/weight");
        const int arity = inst.language.predicates[pred_index].second.arity();

        auto add = [&](long long pos) {
            auto [it, fresh] = inst.weights.try_emplace(std::make_pair(pred_index, pos), energy);
            if (!fresh) {
                it->second.value += energy.value;
                it->second.exact += energy.exact;
            }
        };

        const bool all_positions = c.contains("all_positions") && c["all_positions"].is_boolean() &&
                                   c["all_positions"].get<bool>();
        if (all_positions) {
            for (long long i = 1; i + arity - 1 <= n; ++i)
                add(i);
        } else {
            if (!c.contains("pos") || !c["pos"].is_number_integer())
                bad("constraint requires pos or all_positions", path);
            const long long pos = c["pos"].get<long long>();
            if (pos < 1 || pos + arity - 1 > n)
                bad("constraint position outside the valid range: end " +
                        std::to_string(pos + arity - 1) + " > n = " + std::to_string(n),
                    path + "/pos");
            add(pos);
        }
    }
    return inst;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

Language parse_language(const std::string& json_text) {
    return language_from_json(parse_json(json_text), "");
}

Language parse_language_file(const std::string& path) {
    return parse_language(read_file(path));
}

Instance parse_instance(const std::string& json_text, const std::string& base_dir) {
    return instance_from_json(parse_json(json_text), base_dir);
}

Instance parse_instance_file(const std::string& path) {
    const std::filesystem::path p(path);
    const std::string dir = p.has_parent_path() ? p.parent_path().string() : ".";
    return instance_from_json(parse_json(read_file(path)), dir);
}

namespace {

json language_to_json(const Language& lang) {
    json out;
    out["domain"]["size"] = lang.domain.size;
    if (!lang.domain.labels.empty())
        out["domain"]["labels"] = lang.domain.labels;
    out["kind"] = lang.simple() ? "simple" : "extensional";
    out["predicates"] = json::array();
    for (const auto& [id, p] : lang.predicates) {
        json entry;
        entry["id"] = id;
        if (p.is_simple()) {
            json factors = json::array();
            for (const auto& f : p.factors())
                factors.push_back(f.letters());
            entry["factors"] = std::move(factors);
        } else {
            entry["arity"] = p.arity();
            entry["tuples"] = p.tuples();
        }
        out["predicates"].push_back(std::move(entry));
    }
    return out;
}

} // namespace

std::string serialize_language(const Language& lang) { return language_to_json(lang).dump(); }

std::string serialize_instance(const Instance& inst) {
    json out;
    out["language"] = language_to_json(inst.language);
    out["n"] = inst.n;
    out["constraints"] = json::array();
    for (const auto& [key, energy] : inst.weights) {
        json c;
        c["pred"] = inst.language.predicates[key.first].first;
        c["pos"] = key.second;
        c["weight"] = energy.value;
        out["constraints"].push_back(std::move(c));
    }
    return out.dump();
}

namespace {

// If p = D x q, returns q; arity-1 predicates are never stripped.
std::optional<Predicate> strip_leading_full(const Predicate& p) {
    if (p.arity() < 2)
        return std::nullopt;
    if (p.is_simple()) {
        if (!p.factors().front().is_full())
            return std::nullopt;
        std::vector<LetterSet> rest(p.factors().begin() + 1, p.factors().end());
        return Predicate::simple(std::move(rest));
    }
    // Extensional: every tail must appear with every leading letter.
    std::vector<LetterTuple> tails;
    tails.reserve(p.tuples().size());
    for (const auto& t : p.tuples())
        tails.emplace_back(t.begin() + 1, t.end());
    std::sort(tails.begin(), tails.end());
    tails.erase(std::unique(tails.begin(), tails.end()), tails.end());
    if (tails.size() * static_cast<std::size_t>(p.domain_size()) != p.tuples().size())
        return std::nullopt;
    return Predicate::extensional(p.domain_size(), p.arity() - 1, std::move(tails));
}

// If p = q x D, returns q.
std::optional<Predicate> strip_trailing_full(const Predicate& p) {
    if (p.arity() < 2)
        return std::nullopt;
    if (p.is_simple()) {
        if (!p.factors().back().is_full())
            return std::nullopt;
        std::vector<LetterSet> rest(p.factors().begin(), p.factors().end() - 1);
        return Predicate::simple(std::move(rest));
    }
    std::vector<LetterTuple> heads;
    heads.reserve(p.tuples().size());
    for (const auto& t : p.tuples())
        heads.emplace_back(t.begin(), t.end() - 1);
    std::sort(heads.begin(), heads.end());
    heads.erase(std::unique(heads.begin(), heads.end()), heads.end());
    if (heads.size() * static_cast<std::size_t>(p.domain_size()) != p.tuples().size())
        return std::nullopt;
    return Predicate::extensional(p.domain_size(), p.arity() - 1, std::move(heads));
}

} // namespace

Instance normalize_instance(const Instance& inst) {
    Instance out = inst;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < out.language.predicates.size() && !changed; ++i) {
            const Predicate& p = out.language.predicates[i].second;
            long long shift = 0;
            std::optional<Predicate> stripped = strip_leading_full(p);
            if (stripped) {
                shift = 1;
            } else {
                stripped = strip_trailing_full(p);
                if (!stripped)
                    continue;
            }

            // Move p's weights to the stripped predicate at the shifted
            // start, then drop p from the language.
            const std::string id = out.language.predicates[i].first;
            int target = -1;
            for (std::size_t k = 0; k < out.language.predicates.size(); ++k)
                if (out.language.predicates[k].second == *stripped) {
                    target = static_cast<int>(k);
                    break;
                }
            std::vector<std::pair<long long, Energy>> moved;
            for (auto it = out.weights.begin(); it != out.weights.end();) {
                if (it->first.first == static_cast<int>(i)) {
                    moved.emplace_back(it->first.second + shift, it->second);
                    it = out.weights.erase(it);
                } else {
                    ++it;
                }
            }

            Instance next;
            next.n = out.n;
            next.language.domain = out.language.domain;
            std::vector<int> remap(out.language.predicates.size(), -1);
            for (std::size_t k = 0; k < out.language.predicates.size(); ++k) {
                if (k == i)
                    continue;
                remap[k] = static_cast<int>(next.language.predicates.size());
                next.language.predicates.push_back(out.language.predicates[k]);
            }
            int stripped_index = target >= 0 ? remap[target] : -1;
            if (stripped_index < 0) {
                // The stripped predicate inherits the removed one's id.
                stripped_index = static_cast<int>(next.language.predicates.size());
                next.language.predicates.emplace_back(id, *stripped);
            }
            for (const auto& [key, energy] : out.weights)
                next.weights.emplace(std::make_pair(remap[key.first], key.second), energy);
            for (const auto& [pos, energy] : moved) {
                auto [it, fresh] =
                    next.weights.try_emplace(std::make_pair(stripped_index, pos), energy);
                if (!fresh) {
                    it->second.value += energy.value;
                    it->second.exact += energy.exact;
                }
            }
            out = std::move(next);
            changed = true;
        }
    }
    return out;
}

std::string format_double(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

std::string result_to_json(const SolveResult& result) {
    std::ostringstream out;
    out << "{\"value\":" << format_double(result.value);
    if (result.argmin) {
        out << ",\"argmin\":[";
        for (std::size_t i = 0; i < result.argmin->size(); ++i) {
            if (i)
                out << ',';
            out << (*result.argmin)[i];
        }
        out << ']';
    }
    out << ",\"stats\":{\"closure_size\":" << result.stats.closure_size
        << ",\"star_size\":" << result.stats.star_size
        << ",\"hasse_edges\":" << result.stats.hasse_edges
        << ",\"oplus_ops\":" << result.stats.oplus_ops
        << ",\"otimes_ops\":" << result.stats.otimes_ops
        << ",\"wall_ms\":" << format_double(result.stats.wall_ms) << "}}";
    return out.str();
}

} // namespace gpp
