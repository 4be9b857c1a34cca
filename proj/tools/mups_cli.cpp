#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mups/oracle.hpp"
#include "mups/subst_index.hpp"

using json = nlohmann::ordered_json;
using namespace mups;

namespace {

enum Exit { kOk = 0, kUsage = 1, kIo = 2, kMismatch = 3 };

// Delta sizes are asserted against C * log2(n) + C.
constexpr double kDeltaBoundC = 3.0;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::optional<std::string> text;
    std::optional<std::string> file;
    Pos pos = 0;
    std::string to;
    int n = 8;
    int sigma = 2;
    int trials = 1;
    int queries = 0;
    int bench_n = 100000;
    int bench_sigma = 2;
    int bench_queries = 1000;
    std::uint64_t seed = 1;
    bool json_out = false;
    bool inject_fault = false;
};

std::string read_input(const Config& cfg) {
    std::string raw;
    if (cfg.file) {
        std::ifstream in(*cfg.file, std::ios::binary);
        if (!in) throw IoError("cannot read " + *cfg.file);
        raw.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        if (in.bad()) throw IoError("cannot read " + *cfg.file);
    } else if (cfg.text) {
        raw = *cfg.text;
    } else {
        throw CLI::ValidationError("input", "give --text or --file");
    }
    if (raw.empty()) throw IoError("input text is empty");
    return raw;
}

unsigned char target_symbol(const Config& cfg) {
    if (cfg.to.size() != 1) throw CLI::ValidationError("--to", "expects exactly one character");
    return static_cast<unsigned char>(cfg.to[0]);
}

void check_position(const std::string& raw, Pos pos) {
    if (pos < 1 || static_cast<std::size_t>(pos) > raw.size())
        throw CLI::ValidationError("--pos", "position " + std::to_string(pos) + " outside [1, " +
                                                std::to_string(raw.size()) + "]");
}

std::string random_text(std::mt19937_64& rng, int n, int sigma) {
    std::uniform_int_distribution<int> d(0, sigma - 1);
    std::string s(static_cast<std::size_t>(n), 'a');
    for (auto& ch : s) ch = static_cast<char>('a' + d(rng));
    return s;
}

// A byte absent from t, used to spell a fresh code.
unsigned char fresh_symbol(const Text& t) {
    for (int c : {'z', 'y', 'x', 'Z', '#'})
        if (t.code_of(static_cast<unsigned char>(c)) == t.sigma()) return static_cast<unsigned char>(c);
    for (int c = 1; c < 256; ++c)
        if (t.code_of(static_cast<unsigned char>(c)) == t.sigma()) return static_cast<unsigned char>(c);
    throw std::runtime_error("text uses every byte");
}

unsigned char symbol_for(const Text& t, Code s) { return s == t.sigma() ? fresh_symbol(t) : t.symbol_of(s); }

json interval_json(Interval iv, const std::string& source) {
    return json{{"interval", {iv.b, iv.e}},
                {"substring", source.substr(static_cast<std::size_t>(iv.b - 1), static_cast<std::size_t>(iv.length()))}};
}

json mups_document(const std::string& raw, const MupsSet& set) {
    json list = json::array();
    for (const Interval iv : set) list.push_back(interval_json(iv, raw));
    return json{{"n", raw.size()}, {"count", set.size()}, {"mups", list}};
}

void emit(const json& doc, bool as_json) {
    if (as_json) {
        std::cout << doc.dump(2, ' ', true, json::error_handler_t::replace) << '\n';
        return;
    }
    auto scalar = [](const json& v) { return v.dump(-1, ' ', true, json::error_handler_t::replace); };
    for (const auto& [key, value] : doc.items()) {
        if (!value.is_array() || value.empty() || !value.front().is_object()) {
            std::cout << key << ": " << scalar(value) << '\n';
            continue;
        }
        std::cout << key << ":\n";
        for (const auto& item : value) {
            std::cout << " ";
            for (const auto& [k, v] : item.items()) std::cout << ' ' << k << '=' << scalar(v);
            std::cout << '\n';
        }
    }
}

int cmd_list(const Config& cfg) {
    const std::string raw = read_input(cfg);
    const SubstIndex idx(Text::from_symbols(raw));
    emit(mups_document(raw, idx.mups()), cfg.json_out);
    return kOk;
}

int cmd_delta(const Config& cfg) {
    const std::string raw = read_input(cfg);
    check_position(raw, cfg.pos);
    const unsigned char to = target_symbol(cfg);
    const SubstIndex idx(Text::from_symbols(raw));
    const SubstitutionQuery q = make_query(idx.text(), cfg.pos, to);
    validate(idx.text(), q);
    const auto start = std::chrono::steady_clock::now();
    const auto typed = idx.typed_delta(q);
    const auto micros = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();

    std::string edited = raw;
    edited[static_cast<std::size_t>(cfg.pos - 1)] = static_cast<char>(to);
    json removed = json::array(), added = json::array();
    for (const auto& x : typed) {
        const bool removal = x.type == DeltaType::R1 || x.type == DeltaType::R2 || x.type == DeltaType::R3;
        json item = interval_json(x.iv, removal ? raw : edited);
        item["type"] = std::string(to_string(x.type));
        (removal ? removed : added).push_back(std::move(item));
    }
    emit(json{{"n", raw.size()},
              {"pos", cfg.pos},
              {"to", std::string(1, static_cast<char>(to))},
              {"removed", removed},
              {"added", added},
              {"micros", micros}},
         cfg.json_out);
    return kOk;
}

int cmd_after(const Config& cfg) {
    const std::string raw = read_input(cfg);
    check_position(raw, cfg.pos);
    const unsigned char to = target_symbol(cfg);
    const SubstIndex idx(Text::from_symbols(raw));
    const SubstitutionQuery q = make_query(idx.text(), cfg.pos, to);
    validate(idx.text(), q);
    std::string edited = raw;
    edited[static_cast<std::size_t>(cfg.pos - 1)] = static_cast<char>(to);
    emit(mups_document(edited, idx.after(q)), cfg.json_out);
    return kOk;
}

// Fast result, optionally corrupted to exercise the mismatch path.
MupsDelta fast_delta(const SubstIndex& idx, SubstitutionQuery q, bool fault) {
    MupsDelta d = idx.delta(q);
    if (!fault) return d;
    if (!d.added.empty())
        d.added.pop_back();
    else if (!d.removed.empty())
        d.removed.pop_back();
    else
        d.added.push_back({q.i, q.i});
    return d;
}

bool mismatches(const std::string& raw, Pos i, unsigned char to, bool fault) {
    const SubstIndex idx(Text::from_symbols(raw));
    const SubstitutionQuery q = make_query(idx.text(), i, to);
    return fast_delta(idx, q, fault) != oracle::naive_delta(idx.text(), q);
}

struct Reproducer {
    std::string text;
    Pos pos;
    unsigned char to;
};

// Greedy shrinking: drop characters, then flatten the rest to one symbol.
Reproducer minimize(Reproducer r, bool fault) {
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t j = 0; j < r.text.size() && r.text.size() > 1; ++j) {
            if (static_cast<Pos>(j + 1) == r.pos) continue;
            Reproducer c = r;
            c.text.erase(j, 1);
            if (static_cast<Pos>(j + 1) < r.pos) --c.pos;
            if (mismatches(c.text, c.pos, c.to, fault)) {
                r = std::move(c);
                changed = true;
                break;
            }
        }
    }
    for (std::size_t j = 0; j < r.text.size(); ++j) {
        if (static_cast<Pos>(j + 1) == r.pos || r.text[j] == 'a') continue;
        Reproducer c = r;
        c.text[j] = 'a';
        if (static_cast<unsigned char>(c.text[static_cast<std::size_t>(c.pos - 1)]) != c.to &&
            mismatches(c.text, c.pos, c.to, fault))
            r = std::move(c);
    }
    return r;
}

int cmd_verify(const Config& cfg) {
    if (cfg.n < 1) throw CLI::ValidationError("--n", "must be at least 1");
    if (cfg.sigma < 1 || cfg.sigma > 26) throw CLI::ValidationError("--sigma", "must be in [1, 26]");
    std::mt19937_64 rng(cfg.seed);
    std::size_t checked = 0;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        const std::string raw = random_text(rng, cfg.n, cfg.sigma);
        const SubstIndex idx(Text::from_symbols(raw));
        const Text& t = idx.text();
        std::vector<SubstitutionQuery> qs;
        if (cfg.queries == 0) {
            for (Pos i = 1; i <= t.size(); ++i)
                for (Code c = 0; c <= t.sigma(); ++c)
                    if (c != t.at(i)) qs.push_back({i, c});
        } else {
            std::uniform_int_distribution<Pos> pick_pos(1, t.size());
            std::uniform_int_distribution<Code> pick_code(0, t.sigma() - 1);
            for (int k = 0; k < cfg.queries; ++k) {
                const Pos i = pick_pos(rng);
                Code c = pick_code(rng);  // codes >= t.at(i) shift up by one, so sigma() is reachable
                if (c >= t.at(i)) ++c;
                qs.push_back({i, c});
            }
        }
        for (const auto q : qs) {
            ++checked;
            if (fast_delta(idx, q, cfg.inject_fault) == oracle::naive_delta(t, q)) continue;
            const Reproducer r = minimize({raw, q.i, symbol_for(t, q.s)}, cfg.inject_fault);
            emit(json{{"status", "fail"},
                      {"trial", trial},
                      {"queries", checked},
                      {"reproducer", {{"text", r.text}, {"pos", r.pos}, {"to", std::string(1, static_cast<char>(r.to))}}}},
                 cfg.json_out);
            return kMismatch;
        }
    }
    emit(json{{"status", "pass"}, {"trials", cfg.trials}, {"queries", checked}, {"mismatches", 0}}, cfg.json_out);
    return kOk;
}

double percentile(std::vector<double> v, double p) {
    if (v.empty()) return 0.0;
    const auto k = static_cast<std::size_t>(p * static_cast<double>(v.size() - 1));
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
    return v[k];
}

int cmd_bench(const Config& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::string raw;
    if (cfg.text || cfg.file) {
        raw = read_input(cfg);
    } else {
        if (cfg.bench_n < 1) throw CLI::ValidationError("--n", "must be at least 1");
        if (cfg.bench_sigma < 1 || cfg.bench_sigma > 26) throw CLI::ValidationError("--sigma", "must be in [1, 26]");
        raw = random_text(rng, cfg.bench_n, cfg.bench_sigma);
    }
    const auto t0 = std::chrono::steady_clock::now();
    const SubstIndex idx(Text::from_symbols(raw));
    const double build_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const Text& t = idx.text();
    const Pos n = t.size();

    std::vector<double> micros;
    std::map<std::size_t, std::size_t> histogram;
    std::size_t max_d = 0;
    for (int k = 0; k < cfg.bench_queries; ++k) {
        const Pos i = std::uniform_int_distribution<Pos>(1, n)(rng);
        Code c = std::uniform_int_distribution<Code>(0, t.sigma() - 1)(rng);
        if (c >= t.at(i)) ++c;
        const auto s = std::chrono::steady_clock::now();
        const MupsDelta d = idx.delta({i, c});
        micros.push_back(std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - s).count());
        max_d = std::max(max_d, d.size());
        ++histogram[d.size()];
    }
    const double log_n = std::log2(static_cast<double>(n));
    const double bound = kDeltaBoundC * log_n + kDeltaBoundC;
    json sizes = json::object();
    for (const auto& [d, count] : histogram) sizes[std::to_string(d)] = count;
    json doc{{"n", n},
             {"sigma", t.sigma()},
             {"mups", idx.mups().size()},
             {"build_ms", build_ms},
             {"queries", cfg.bench_queries},
             {"micros_p50", percentile(micros, 0.5)},
             {"micros_p99", percentile(micros, 0.99)},
             {"max_d", max_d},
             {"max_d_over_log2n", n > 1 ? json(static_cast<double>(max_d) / log_n) : json(nullptr)},
             {"bound_c", kDeltaBoundC},
             {"bound_holds", static_cast<double>(max_d) <= bound},
             {"delta_sizes", sizes}};
    emit(doc, cfg.json_out);
    return static_cast<double>(max_d) <= bound ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal unique palindromic substrings under one substitution"};
    app.require_subcommand(1);
    Config cfg;

    auto add_input = [&](CLI::App* sub) {
        auto* text = sub->add_option("--text", cfg.text, "Inline input text");
        auto* file = sub->add_option("--file", cfg.file, "Read the input text from a file");
        text->excludes(file);
    };
    auto add_query = [&](CLI::App* sub) {
        sub->add_option("--pos", cfg.pos, "1-based position to substitute")->required();
        sub->add_option("--to", cfg.to, "Replacement character")->required();
    };
    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", cfg.json_out, "Emit JSON"); };

    auto* list = app.add_subcommand("list", "List MUPS(T)");
    add_input(list);
    add_json(list);

    auto* delta = app.add_subcommand("delta", "Report the MUPSs removed and added by a substitution");
    add_input(delta);
    add_query(delta);
    add_json(delta);

    auto* after = app.add_subcommand("after", "List MUPS(T') after a substitution");
    add_input(after);
    add_query(after);
    add_json(after);

    auto* verify = app.add_subcommand("verify", "Compare the index with brute force on random texts");
    verify->add_option("--n", cfg.n, "Text length");
    verify->add_option("--sigma", cfg.sigma, "Alphabet size");
    verify->add_option("--trials", cfg.trials, "Number of random texts");
    verify->add_option("--queries", cfg.queries, "Sampled queries per text (0 means all)");
    verify->add_option("--seed", cfg.seed, "RNG seed");
    verify->add_flag("--inject-fault", cfg.inject_fault)->group("");
    add_json(verify);

    auto* bench = app.add_subcommand("bench", "Time index construction and queries");
    add_input(bench);
    bench->add_option("--n", cfg.bench_n, "Random text length")->capture_default_str();
    bench->add_option("--sigma", cfg.bench_sigma, "Random text alphabet size")->capture_default_str();
    bench->add_option("--queries", cfg.bench_queries, "Number of random queries")->capture_default_str();
    bench->add_option("--seed", cfg.seed, "RNG seed");
    add_json(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*list) return cmd_list(cfg);
        if (*delta) return cmd_delta(cfg);
        if (*after) return cmd_after(cfg);
        if (*verify) return cmd_verify(cfg);
        return cmd_bench(cfg);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
