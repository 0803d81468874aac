#include "gmrc/search.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <exception>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace gmrc {

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Word j of the per-trial stream; depends only on (seed, stream index, j).
std::uint64_t stream_word(std::uint64_t seed, std::uint64_t stream, std::uint64_t j) {
    return mix64(mix64(seed + 0x9e3779b97f4a7c15ULL * stream) + j);
}

std::vector<std::size_t> free_positions(const SearchConfig& cfg,
                                        const ConstructionSpec& spec) {
    std::vector<std::size_t> free;
    if (cfg.pattern.empty()) {
        for (std::size_t i = 0; i < spec.bit_budget; ++i) free.push_back(i);
        return free;
    }
    if (cfg.pattern.size() != spec.bit_budget)
        throw std::invalid_argument("pattern length must equal the bit budget");
    for (std::size_t i = 0; i < spec.bit_budget; ++i) {
        char ch = cfg.pattern[i];
        if (ch == 'x')
            free.push_back(i);
        else if (ch != '0' && ch != '1')
            throw std::invalid_argument("pattern characters must be 0, 1 or x");
    }
    return free;
}

Bits pinned_bits(const SearchConfig& cfg, const ConstructionSpec& spec) {
    Bits bits(spec.bit_budget, 0);
    if (!cfg.pattern.empty())
        for (std::size_t i = 0; i < spec.bit_budget; ++i)
            if (cfg.pattern[i] == '1') bits[i] = 1;
    return bits;
}

std::string now_text() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct Plan {
    const ConstructionSpec* spec = nullptr;
    std::vector<std::size_t> free;
    Bits pinned;
    std::uint64_t total = 0;  // trial count including injected vectors
};

Plan make_plan(const SearchConfig& cfg) {
    Plan plan;
    plan.spec = find_spec(cfg.spec);
    if (!plan.spec) throw std::invalid_argument("unknown spec " + cfg.spec);
    plan.free = free_positions(cfg, *plan.spec);
    plan.pinned = pinned_bits(cfg, *plan.spec);
    for (const Bits& b : cfg.include_bits)
        if (b.size() != plan.spec->bit_budget)
            throw std::invalid_argument("injected bits do not match the bit budget");
    if (cfg.mode == SearchMode::Random) {
        if (cfg.trials < 1)
            throw std::invalid_argument("random mode needs trials >= 1");
        plan.total = cfg.include_bits.size() + cfg.trials;
    } else {
        if (plan.free.size() > cfg.exhaustive_cap)
            throw std::invalid_argument("exhaustive mode over the free-bit cap");
        plan.total = cfg.include_bits.size() + (std::uint64_t(1) << plan.free.size());
    }
    return plan;
}

Bits plan_bits(const SearchConfig& cfg, const Plan& plan, std::uint64_t trial) {
    if (trial < cfg.include_bits.size()) return cfg.include_bits[trial];
    std::uint64_t stream = trial - cfg.include_bits.size();
    Bits bits = plan.pinned;
    if (cfg.mode == SearchMode::Exhaustive) {
        for (std::size_t i = 0; i < plan.free.size(); ++i)
            bits[plan.free[i]] = (stream >> i) & 1u;
        return bits;
    }
    for (std::size_t i = 0; i < plan.free.size(); ++i) {
        std::uint64_t w = stream_word(cfg.seed, stream, i / 64);
        bits[plan.free[i]] = (w >> (i % 64)) & 1u;
    }
    return bits;
}

bool evaluate_trial(const SearchConfig& cfg, const Plan& plan, std::uint64_t trial,
                    SearchRecord& out) {
    Bits bits = plan_bits(cfg, plan, trial);
    BinaryMatrix tau = build_tau(*plan.spec, bits);
    if (mat_mul(tau, transpose(tau)) != BinaryMatrix::identity(tau.rows()))
        return false;
    LinearCode c = build_generator(*plan.spec, bits);
    std::size_t depth = std::max<std::size_t>(16, cfg.min_distance_target > 0
                                                      ? cfg.min_distance_target - 1
                                                      : 0);
    WeightProfile profile = weights_upto(c, depth);
    std::size_t d = 0;
    for (std::size_t w = 1; w <= profile.w_max; ++w)
        if (profile.at(w)) { d = w; break; }
    if (d == 0) d = min_distance(c);
    if (d < cfg.min_distance_target) return false;
    Classification72 cls;
    try {
        cls = classify_72(c, profile);
    } catch (const std::exception&) {
        return false;
    }
    out.spec = plan.spec->name;
    out.bits_hex = bits_to_hex(bits);
    out.trial = trial;
    out.self_dual = true;
    out.d = d;
    out.cls = cls;
    out.a12 = profile.at(12);
    out.a14 = profile.at(14);
    out.a16 = profile.at(16);
    out.timestamp = now_text();
    return true;
}

}  // namespace

std::string SearchRecord::dedup_key() const {
    std::ostringstream key;
    key << kind_to_string(cls.kind) << '/';
    if (cls.kind == Kind72::TypeII)
        key << cls.alpha;
    else
        key << cls.gamma << ',' << cls.beta;
    key << '/' << a12 << ',' << a14 << ',' << a16;
    return key.str();
}

Bits trial_bits(const SearchConfig& cfg, const ConstructionSpec& spec,
                std::uint64_t trial) {
    Plan plan;
    plan.spec = &spec;
    plan.free = free_positions(cfg, spec);
    plan.pinned = pinned_bits(cfg, spec);
    return plan_bits(cfg, plan, trial);
}

std::vector<SearchRecord> run_search(const SearchConfig& cfg) {
    Plan plan = make_plan(cfg);
    std::size_t workers = std::max<std::size_t>(1, cfg.workers);

    std::vector<std::vector<SearchRecord>> found(workers);
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](std::size_t w) {
        try {
            for (std::uint64_t t = w; t < plan.total; t += workers) {
                SearchRecord rec;
                if (evaluate_trial(cfg, plan, t, rec)) found[w].push_back(std::move(rec));
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
        for (std::thread& t : threads) t.join();
    }
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<SearchRecord> merged;
    for (std::vector<SearchRecord>& part : found)
        for (SearchRecord& rec : part) merged.push_back(std::move(rec));
    std::sort(merged.begin(), merged.end(),
              [](const SearchRecord& a, const SearchRecord& b) { return a.trial < b.trial; });
    return dedup(merged);
}

std::vector<SearchRecord> dedup(const std::vector<SearchRecord>& records) {
    std::vector<SearchRecord> out;
    std::unordered_set<std::string> seen;
    for (const SearchRecord& rec : records)
        if (seen.insert(rec.dedup_key()).second) out.push_back(rec);
    return out;
}

void write_records(std::ostream& out, const std::vector<SearchRecord>& records) {
    for (const SearchRecord& rec : records) {
        nlohmann::ordered_json line;
        line["spec"] = rec.spec;
        line["bits"] = rec.bits_hex;
        line["trial"] = rec.trial;
        line["self_dual"] = rec.self_dual;
        line["d"] = rec.d;
        line["kind"] = kind_to_string(rec.cls.kind);
        if (rec.cls.kind == Kind72::TypeII) {
            line["alpha"] = rec.cls.alpha;
        } else {
            line["gamma"] = rec.cls.gamma;
            line["beta"] = rec.cls.beta;
        }
        line["a12"] = rec.a12;
        line["a14"] = rec.a14;
        line["a16"] = rec.a16;
        out << line.dump() << "\n";
    }
}

std::vector<SearchRecord> read_records(std::istream& in) {
    std::vector<SearchRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json doc = nlohmann::json::parse(line);
        SearchRecord rec;
        rec.spec = doc.at("spec").get<std::string>();
        rec.bits_hex = doc.at("bits").get<std::string>();
        rec.trial = doc.at("trial").get<std::uint64_t>();
        rec.self_dual = doc.at("self_dual").get<bool>();
        rec.d = doc.at("d").get<std::size_t>();
        rec.cls.kind = kind_from_string(doc.at("kind").get<std::string>());
        if (rec.cls.kind == Kind72::TypeII) {
            rec.cls.alpha = doc.at("alpha").get<long long>();
        } else {
            rec.cls.gamma = doc.at("gamma").get<long long>();
            rec.cls.beta = doc.at("beta").get<long long>();
        }
        rec.a12 = doc.at("a12").get<std::uint64_t>();
        rec.a14 = doc.at("a14").get<std::uint64_t>();
        rec.a16 = doc.at("a16").get<std::uint64_t>();
        out.push_back(std::move(rec));
    }
    return out;
}

std::string summarize_records(const std::vector<SearchRecord>& records) {
    std::ostringstream out;
    for (const SearchRecord& rec : records) {
        out << rec.spec << " " << kind_to_string(rec.cls.kind);
        if (rec.cls.kind == Kind72::TypeII)
            out << " alpha=" << rec.cls.alpha;
        else
            out << " gamma=" << rec.cls.gamma << " beta=" << rec.cls.beta;
        out << " d=" << rec.d;
        const ConstructionSpec* spec = find_spec(rec.spec);
        if (spec) {
            Bits bits = bits_from_hex(rec.bits_hex, spec->bit_budget);
            for (const auto& [name, value] : encode_table_row(*spec, bits))
                out << " " << name << "=" << value;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace gmrc
