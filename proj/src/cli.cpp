#include "gmrc/cli.hpp"

#include <CLI11.hpp>
#include <bit>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "gmrc/constructions.hpp"
#include "gmrc/group_matrix_ring.hpp"
#include "gmrc/linear_code.hpp"
#include "gmrc/search.hpp"

namespace gmrc {

namespace {

std::string slurp(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + path);
        ss << f.rdbuf();
    }
    return ss.str();
}

struct ConstructOpts {
    std::string spec_name;
    std::string bits_text;
    std::vector<std::string> fields;
    std::string config_path;
    std::string out_path;
};

int cmd_construct(const ConstructOpts& o, std::ostream& out, std::ostream& err) {
    try {
        std::string spec_name = o.spec_name;
        std::string bits_text = o.bits_text;
        std::map<std::string, std::string> fields;
        auto add_field = [&fields](const std::string& name, const std::string& value) {
            if (!fields.emplace(name, value).second)
                throw std::invalid_argument("duplicate field " + name);
        };
        for (const std::string& f : o.fields) {
            auto eq = f.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("--field needs NAME=BITS");
            add_field(f.substr(0, eq), f.substr(eq + 1));
        }
        if (!o.config_path.empty()) {
            nlohmann::json doc = nlohmann::json::parse(slurp(o.config_path));
            spec_name = doc.at("spec").get<std::string>();
            if (doc.contains("bits")) bits_text = doc.at("bits").get<std::string>();
            if (doc.contains("fields"))
                for (const auto& [key, value] : doc.at("fields").items())
                    add_field(key, value.get<std::string>());
        }
        if (spec_name.empty()) throw std::invalid_argument("no spec given");
        const ConstructionSpec* spec = find_spec(spec_name);
        if (!spec) throw std::invalid_argument("unknown spec " + spec_name);
        if (!bits_text.empty() && !fields.empty())
            throw std::invalid_argument("give either bits or fields, not both");
        Bits bits;
        if (!bits_text.empty())
            bits = parse_bits(bits_text, spec->bit_budget);
        else if (!fields.empty())
            bits = decode_table_row(*spec, fields);
        else
            throw std::invalid_argument("no bits given");
        std::string text = build_generator(*spec, bits).gen.to_text();
        if (o.out_path.empty()) {
            out << text;
        } else {
            std::ofstream f(o.out_path, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open " + o.out_path);
            f << text;
        }
        return 0;
    } catch (const std::exception& e) {
        err << "construct: " << e.what() << "\n";
        return 2;
    }
}

int cmd_check(const std::string& path, bool json_mode, std::ostream& out,
              std::ostream& err) {
    LinearCode c;
    try {
        c = code_from_rows(BinaryMatrix::from_text(slurp(path)));
    } catch (const std::exception& e) {
        err << "check: " << e.what() << "\n";
        return 1;
    }
    bool so = is_self_orthogonal(c);
    bool sd = is_self_dual(c);
    std::optional<bool> de;
    if (so) de = is_doubly_even(c);
    std::optional<std::size_t> d;
    std::optional<Classification72> cls;
    if (sd && c.length == 72 && c.rank == 36) {
        WeightProfile p = weights_upto(c, 16);
        for (std::size_t w = 1; w <= 16 && !d; ++w)
            if (p.at(w)) d = w;
        if (!d) d = min_distance(c);
        if (*d >= 12) {
            try {
                cls = classify_72(c, p);
            } catch (const std::exception&) {
            }
        }
    } else if (c.rank > 0 && c.rank <= 64) {
        d = min_distance(c);
    }
    std::optional<bool> extremal;
    if (sd && d)
        extremal = is_extremal(c.length, *d,
                               de && *de ? SelfDualKind::TypeII : SelfDualKind::TypeI);

    std::ostringstream summary;
    if (!sd) {
        summary << "not self-dual";
    } else {
        if (cls) {
            if (cls->kind == Kind72::TypeII)
                summary << "Type II self-dual [72,36,12], alpha=" << cls->alpha;
            else
                summary << "Type I self-dual [72,36,12], enumerator "
                        << (cls->kind == Kind72::TypeI_W1 ? "W1" : "W2")
                        << ", gamma=" << cls->gamma << " beta=" << cls->beta;
        } else {
            summary << "self-dual [" << c.length << "," << c.rank;
            if (d) summary << "," << *d;
            summary << "]";
        }
        if (extremal && *extremal) summary << ", extremal";
    }

    if (json_mode) {
        nlohmann::ordered_json doc;
        doc["length"] = c.length;
        doc["dimension"] = c.rank;
        doc["self_orthogonal"] = so;
        doc["self_dual"] = sd;
        if (de) doc["doubly_even"] = *de;
        if (d) doc["min_distance"] = *d;
        if (extremal) doc["extremal"] = *extremal;
        if (cls) {
            nlohmann::ordered_json k;
            k["kind"] = kind_to_string(cls->kind);
            if (cls->kind == Kind72::TypeII) {
                k["alpha"] = cls->alpha;
            } else {
                k["gamma"] = cls->gamma;
                k["beta"] = cls->beta;
            }
            doc["classification"] = k;
        }
        doc["summary"] = summary.str();
        out << doc.dump() << "\n";
    } else {
        auto yn = [](bool b) { return b ? "yes" : "no"; };
        out << "length=" << c.length << "\n";
        out << "dimension=" << c.rank << "\n";
        out << "self_orthogonal=" << yn(so) << "\n";
        out << "self_dual=" << yn(sd) << "\n";
        if (de) out << "doubly_even=" << yn(*de) << "\n";
        if (d) out << "min_distance=" << *d << "\n";
        if (extremal) out << "extremal=" << yn(*extremal) << "\n";
        out << "summary: " << summary.str() << "\n";
    }
    return 0;
}

int cmd_reproduce(const std::string& only, std::ostream& out, std::ostream& err) {
    bool any = false;
    bool all_ok = true;
    for (const CatalogEntry& entry : catalog_entries()) {
        if (!only.empty() && entry.name != only) continue;
        any = true;
        std::string line;
        if (!verify_catalog_entry(entry, line)) all_ok = false;
        out << line << "\n";
    }
    if (only.empty() || only == "E1") {
        any = true;
        std::string line;
        if (!verify_example16(line)) all_ok = false;
        out << line << "\n";
    }
    if (!any) {
        err << "reproduce: unknown code " << only << "\n";
        return 2;
    }
    return all_ok ? 0 : 1;
}

struct SearchOpts {
    std::string spec;
    std::string mode = "random";
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::size_t workers = 1;
    std::size_t target = 12;
    std::string pattern;
    std::vector<std::string> include_bits;
    std::size_t cap = 28;
    std::string out_path;
};

int cmd_search(const SearchOpts& o, std::ostream& out, std::ostream& err) {
    try {
        SearchConfig cfg;
        cfg.spec = o.spec;
        if (o.mode == "random")
            cfg.mode = SearchMode::Random;
        else if (o.mode == "exhaustive")
            cfg.mode = SearchMode::Exhaustive;
        else
            throw std::invalid_argument("mode must be random or exhaustive");
        cfg.trials = o.trials;
        cfg.seed = o.seed;
        cfg.workers = o.workers;
        cfg.min_distance_target = o.target;
        cfg.pattern = o.pattern;
        cfg.exhaustive_cap = o.cap;
        const ConstructionSpec* spec = find_spec(cfg.spec);
        if (!spec) throw std::invalid_argument("unknown spec " + cfg.spec);
        for (const std::string& s : o.include_bits)
            cfg.include_bits.push_back(parse_bits(s, spec->bit_budget));
        std::vector<SearchRecord> records = run_search(cfg);
        if (o.out_path.empty()) {
            write_records(out, records);
        } else {
            std::ofstream f(o.out_path, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open " + o.out_path);
            write_records(f, records);
            out << "records=" << records.size() << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        err << "search: " << e.what() << "\n";
        return 2;
    }
}

int cmd_oracle(const std::string& path, std::ostream& out, std::ostream& err) {
    LinearCode c;
    try {
        c = code_from_rows(BinaryMatrix::from_text(slurp(path)));
    } catch (const std::exception& e) {
        err << "oracle: " << e.what() << "\n";
        return 1;
    }
    if (c.rank > 24) {
        err << "oracle: rank " << c.rank << " is over the enumeration cap of 24\n";
        return 2;
    }
    std::vector<std::uint64_t> counts(c.length + 1, 0);
    std::vector<std::uint64_t> word(c.basis.words_per_row(), 0);
    counts[0] = 1;
    std::uint64_t total = c.rank == 0 ? 1 : std::uint64_t(1) << c.rank;
    for (std::uint64_t g = 1; g < total; ++g) {
        std::size_t r = std::size_t(std::countr_zero(g));
        const std::uint64_t* row = c.basis.row(r);
        std::size_t wt = 0;
        for (std::size_t wi = 0; wi < word.size(); ++wi) {
            word[wi] ^= row[wi];
            wt += std::size_t(std::popcount(word[wi]));
        }
        ++counts[wt];
    }
    for (std::size_t w = 0; w <= c.length; ++w)
        if (counts[w]) out << "A_" << w << "=" << counts[w] << "\n";
    return 0;
}

int cmd_summarize(const std::string& path, std::ostream& out, std::ostream& err) {
    try {
        std::istringstream in(slurp(path));
        out << summarize_records(read_records(in));
        return 0;
    } catch (const std::exception& e) {
        err << "summarize: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

bool verify_catalog_entry(const CatalogEntry& entry, std::string& line) {
    std::vector<std::string> problems;
    std::string detail;
    try {
        const ConstructionSpec* spec = find_spec(entry.spec);
        if (!spec) throw std::invalid_argument("unknown spec " + entry.spec);
        std::map<std::string, std::string> fields(entry.fields.begin(),
                                                  entry.fields.end());
        LinearCode c = build_generator(*spec, decode_table_row(*spec, fields));
        if (c.length != 72 || c.rank != 36) problems.push_back("not [72,36]");
        if (!is_self_dual(c)) problems.push_back("not self-dual");
        if (problems.empty()) {
            WeightProfile p = weights_upto(c, 16);
            std::size_t d = 0;
            for (std::size_t w = 1; w <= 16 && !d; ++w)
                if (p.at(w)) d = w;
            if (d != 12) problems.push_back("d=" + std::to_string(d));
            Classification72 cls = classify_72(c, p);
            if (cls.kind != entry.expected.kind) {
                problems.push_back("kind=" + kind_to_string(cls.kind));
            } else if (cls.kind == Kind72::TypeII) {
                if (cls.alpha != entry.expected.alpha)
                    problems.push_back("alpha=" + std::to_string(cls.alpha));
            } else {
                if (cls.gamma != entry.expected.gamma)
                    problems.push_back("gamma=" + std::to_string(cls.gamma));
                if (cls.beta != entry.expected.beta)
                    problems.push_back("beta=" + std::to_string(cls.beta));
            }
            if (p.at(12) != entry.a12 || p.at(14) != entry.a14 || p.at(16) != entry.a16)
                problems.push_back("spectrum mismatch");
            std::ostringstream ds;
            ds << kind_to_string(cls.kind) << " ";
            if (cls.kind == Kind72::TypeII)
                ds << "alpha=" << cls.alpha;
            else
                ds << "gamma=" << cls.gamma << " beta=" << cls.beta;
            ds << " d=" << d;
            detail = ds.str();
        }
    } catch (const std::exception& e) {
        problems.push_back(e.what());
    }
    if (problems.empty()) {
        line += entry.name + " PASS " + detail;
        return true;
    }
    line += entry.name + " FAIL";
    for (const std::string& p : problems) line += " " + p;
    return false;
}

bool verify_example16(std::string& line) {
    std::vector<std::string> problems;
    try {
        const Example16& ex = example16();
        BinaryMatrix tau = sigma_tau(ex.v);
        if (!(tau == ex.tau)) problems.push_back("tau mismatch");
        LinearCode c = code_from_rows(tau);
        if (c.length != 16 || c.rank != 8) problems.push_back("not [16,8]");
        if (!is_self_dual(c)) problems.push_back("not self-dual");
        if (problems.empty()) {
            WeightProfile p = weights_upto(c, c.length);
            for (std::size_t w = 0; w <= c.length; ++w)
                if (p.at(w) != ex.spectrum[w]) {
                    problems.push_back("spectrum mismatch at w=" + std::to_string(w));
                    break;
                }
            std::size_t d = min_distance(c);
            if (d != 4) problems.push_back("d=" + std::to_string(d));
        }
    } catch (const std::exception& e) {
        problems.push_back(e.what());
    }
    if (problems.empty()) {
        line += "E1 PASS self-dual [16,8,4]";
        return true;
    }
    line += "E1 FAIL";
    for (const std::string& p : problems) line += " " + p;
    return false;
}

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"group matrix ring code constructions over GF(2)"};
    app.require_subcommand(1);

    ConstructOpts construct;
    CLI::App* c_construct =
        app.add_subcommand("construct", "emit the [I | tau] generator for a spec");
    CLI::Option* opt_spec =
        c_construct->add_option("--spec", construct.spec_name, "construction spec name");
    c_construct->add_option("--bits", construct.bits_text, "flat 0/1 bit string");
    c_construct->add_option("--field", construct.fields,
                            "table field NAME=BITS (repeatable)");
    c_construct
        ->add_option("--config", construct.config_path,
                     "JSON config with spec and bits or fields")
        ->excludes(opt_spec);
    c_construct->add_option("--out", construct.out_path, "output file (default stdout)");

    struct {
        std::string path = "-";
        bool json = false;
    } check;
    CLI::App* c_check =
        app.add_subcommand("check", "report parameters of a generator matrix");
    c_check->add_option("file", check.path, "matrix text file, or - for stdin");
    c_check->add_flag("--json", check.json, "JSON report");

    std::string only;
    CLI::App* c_reproduce =
        app.add_subcommand("reproduce", "verify the embedded published codes");
    c_reproduce->add_option("--only", only, "verify a single code (C1..C20 or E1)");

    SearchOpts search;
    CLI::App* c_search =
        app.add_subcommand("search", "run a seeded search over a spec's bit space");
    c_search->add_option("--spec", search.spec, "construction spec name")->required();
    c_search->add_option("--mode", search.mode, "random or exhaustive");
    c_search->add_option("--trials", search.trials, "random-mode trial count");
    c_search->add_option("--seed", search.seed, "stream seed");
    c_search->add_option("--workers", search.workers, "worker thread count");
    c_search->add_option("--target", search.target, "minimum distance filter");
    c_search->add_option("--pattern", search.pattern, "per-bit mask of 0/1/x");
    c_search->add_option("--include-bits", search.include_bits,
                         "inject a bit string as an early trial (repeatable)");
    c_search->add_option("--cap", search.cap, "exhaustive free-bit cap");
    c_search->add_option("--out", search.out_path,
                         "JSON Lines output file (default stdout)");

    struct {
        std::string path = "-";
    } oracle, summarize;
    CLI::App* c_oracle = app.add_subcommand(
        "oracle", "full weight enumerator by codeword enumeration");
    c_oracle->add_option("file", oracle.path, "matrix text file, or - for stdin");
    CLI::App* c_summarize =
        app.add_subcommand("summarize", "render search records as table rows");
    c_summarize->add_option("file", summarize.path, "JSON Lines file, or - for stdin");

    std::vector<std::string> argv_list;
    argv_list.reserve(args.size() + 1);
    argv_list.push_back("gmrc");
    argv_list.insert(argv_list.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& s : argv_list) argv.push_back(s.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    if (c_construct->parsed()) return cmd_construct(construct, out, err);
    if (c_check->parsed()) return cmd_check(check.path, check.json, out, err);
    if (c_reproduce->parsed()) return cmd_reproduce(only, out, err);
    if (c_search->parsed()) return cmd_search(search, out, err);
    if (c_oracle->parsed()) return cmd_oracle(oracle.path, out, err);
    if (c_summarize->parsed()) return cmd_summarize(summarize.path, out, err);
    err << "no command\n";
    return 2;
}

}  // namespace gmrc
