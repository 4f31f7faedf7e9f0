// Command-line front end for the nsgap library. Every subcommand emits one
// report per request: plain text for reading, structured JSON for scripting.
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 internal
// invariant violation.

#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <nsgap/compound.hpp>
#include <nsgap/errors.hpp>
#include <nsgap/oracle.hpp>
#include <nsgap/parity.hpp>
#include <nsgap/semigroup.hpp>
#include <nsgap/telescopic.hpp>

namespace {

using json = nlohmann::ordered_json;
using namespace nsgap;

constexpr int kExitSuccess = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;
constexpr int kExitInternalError = 3;

struct Options {
    std::string format = "plain";
    bool show_apery = false;
    bool show_gaps = false;
    bool show_sequence = false;
    bool inject_fault = false;
};

struct Check {
    std::string name;
    bool ok;
    std::string detail;
};

// One report per request; rendered at the end so both formats share the
// same field collection.
struct Report {
    std::string command;
    json input;
    json results = json::object();
    std::string method;
    std::vector<Check> checks;
    std::vector<std::string> plain_lines;
    // analyze records boolean facts in checks; only verify renders them
    // as pass/fail lines in plain format.
    bool plain_checks = true;

    void set(const std::string& key, const json& value) { results[key] = value; }

    void line(const std::string& s) { plain_lines.push_back(s); }

    std::string render(const std::string& format) const {
        if (format == "structured") {
            json out;
            out["command"] = command;
            out["input"] = input;
            out["results"] = results;
            out["method"] = method;
            json cs = json::array();
            for (const auto& c : checks) {
                cs.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
            }
            out["checks"] = cs;
            return out.dump(2) + "\n";
        }
        std::string out;
        for (const auto& l : plain_lines) {
            out += l;
            out += '\n';
        }
        if (plain_checks) {
            for (const auto& c : checks) {
                out += c.name + ": " + c.detail + (c.ok ? ": OK" : ": FAIL");
                out += '\n';
            }
        }
        return out;
    }

    bool all_checks_ok() const {
        for (const auto& c : checks) {
            if (!c.ok) {
                return false;
            }
        }
        return true;
    }
};

std::string join(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
            s += ',';
        }
        s += std::to_string(v[i]);
    }
    return s;
}

// Shared tail of every semigroup-valued command: parity report plus the
// bookkeeping numbers, and the opt-in element lists.
void fill_semigroup_results(Report& rep, const GeneratorSequence& g,
                            const Options& opt) {
    const ParityReport pr = parity_report_full(g);
    const GapSet gs = gaps(g);
    rep.set("difference", pr.difference);
    rep.set("odd", *pr.odd_gaps);
    rep.set("even", *pr.even_gaps);
    rep.set("genus", gs.genus());
    rep.set("frobenius", gs.frobenius());
    if (opt.show_apery) {
        rep.set("apery", apery_set(g, g.smallest()).elements_sorted());
    }
    if (opt.show_gaps) {
        rep.set("gaps", gs.values());
    }
    rep.method = to_string(pr.method);

    rep.line("generators: " + join(g.terms()));
    rep.line("difference: " + std::to_string(pr.difference));
    rep.line("odd gaps: " + std::to_string(*pr.odd_gaps));
    rep.line("even gaps: " + std::to_string(*pr.even_gaps));
    rep.line("genus: " + std::to_string(gs.genus()));
    rep.line("frobenius: " + std::to_string(gs.frobenius()));
    if (opt.show_apery) {
        rep.line("apery(" + std::to_string(g.smallest()) +
                 "): " + join(apery_set(g, g.smallest()).elements_sorted()));
    }
    if (opt.show_gaps) {
        rep.line("gaps: " + join(gs.values()));
    }
    rep.line("method: " + rep.method);
}

Report run_analyze(const std::vector<std::int64_t>& gens, const Options& opt) {
    Report rep;
    rep.command = "analyze";
    rep.input = json{{"generators", gens}};
    const GeneratorSequence g = validate_generators(gens);
    fill_semigroup_results(rep, g, opt);
    rep.plain_checks = false;

    const TelescopicAnalysis an = analyze_sequence(gens);
    const std::string quot = "quotients " + (an.quotients.empty() ? "(none)" : join(an.quotients));
    rep.checks.push_back({"telescopic", an.is_telescopic, quot});
    rep.line(std::string("telescopic: ") +
             (an.is_telescopic ? "yes (" + quot + ")" : "no"));

    const GeneratorSequence min = minimal_generators(g);
    std::vector<std::int64_t> sorted = gens;
    std::sort(sorted.begin(), sorted.end());
    const bool is_minimal = min.terms() == sorted;
    rep.checks.push_back({"minimal", is_minimal,
                          "minimal generators " + join(min.terms())});
    rep.line(std::string("minimal: ") +
             (is_minimal ? "yes" : "no (minimal generators " + join(min.terms()) + ")"));
    return rep;
}

Report run_apery(const std::vector<std::int64_t>& gens, std::int64_t t) {
    Report rep;
    rep.command = "apery";
    rep.input = json{{"generators", gens}, {"t", t}};
    const GeneratorSequence g = validate_generators(gens);
    const AperySet ap = apery_set(g, t);
    rep.set("apery", ap.elements_sorted());
    rep.set("sum", ap.sum());
    rep.method = "apery_table";
    rep.line("apery(" + std::to_string(t) + "): " + join(ap.elements_sorted()));
    rep.line("sum: " + std::to_string(ap.sum()));
    return rep;
}

Report run_gaps(const std::vector<std::int64_t>& gens) {
    Report rep;
    rep.command = "gaps";
    rep.input = json{{"generators", gens}};
    const GeneratorSequence g = validate_generators(gens);
    const GapSet gs = gaps(g);
    rep.set("gaps", gs.values());
    rep.set("genus", gs.genus());
    rep.set("frobenius", gs.frobenius());
    rep.method = "apery_table";
    rep.line("gaps: " + join(gs.values()));
    rep.line("genus: " + std::to_string(gs.genus()));
    rep.line("frobenius: " + std::to_string(gs.frobenius()));
    return rep;
}

Report run_parity(const std::vector<std::int64_t>& gens, const Options& opt) {
    Report rep;
    rep.command = "parity";
    rep.input = json{{"generators", gens}};
    const GeneratorSequence g = validate_generators(gens);
    fill_semigroup_results(rep, g, opt);
    return rep;
}

Report run_telescopic(const std::vector<std::int64_t>& terms, const Options& opt) {
    Report rep;
    rep.command = "telescopic";
    rep.input = json{{"terms", terms}};
    const TelescopicAnalysis an = analyze_sequence(terms);
    rep.set("telescopic", an.is_telescopic);
    rep.set("prefix_gcds", an.prefix_gcds);
    rep.set("quotients", an.quotients);
    if (an.first_odd_index) {
        rep.set("first_odd_index", *an.first_odd_index);
    }
    rep.set("even_indices", an.even_indices);

    rep.line("terms: " + join(terms));
    rep.line(std::string("telescopic: ") + (an.is_telescopic ? "yes" : "no"));
    rep.line("prefix gcds: " + join(an.prefix_gcds));
    rep.line("quotients: " + join(an.quotients));

    if (an.is_telescopic && an.overall_gcd() == 1) {
        const std::int64_t diff = parity_difference_free(an);
        rep.set("difference", diff);
        rep.line("difference: " + std::to_string(diff));
        const GeneratorSequence g = validate_generators(terms);
        const GapSet gs = gaps(g);
        rep.set("odd", (gs.genus() + diff) / 2);
        rep.set("even", (gs.genus() - diff) / 2);
        rep.set("genus", gs.genus());
        rep.set("frobenius", gs.frobenius());
        if (opt.show_gaps) {
            rep.set("gaps", gs.values());
            rep.line("gaps: " + join(gs.values()));
        }
        rep.method = to_string(ParityMethod::free_theorem);
    } else {
        rep.method = "analysis";
    }
    rep.line("method: " + rep.method);
    return rep;
}

Report run_compound(const std::vector<std::int64_t>& a,
                    const std::vector<std::int64_t>& b, const Options& opt) {
    Report rep;
    rep.command = "compound";
    rep.input = json{{"a", a}, {"b", b}};
    const SuitablePair pair = validate_pair(a, b);
    const CompoundSequence cs = build_compound(pair);
    if (opt.show_sequence) {
        rep.set("sequence", cs.terms);
        rep.line("sequence: " + join(cs.terms));
    }

    const std::int64_t diff = parity_difference_compound(pair);
    const GeneratorSequence g = validate_generators(cs.terms);
    const GapSet gs = gaps(g);
    rep.set("difference", diff);
    rep.set("odd", (gs.genus() + diff) / 2);
    rep.set("even", (gs.genus() - diff) / 2);
    rep.set("genus", gs.genus());
    rep.set("frobenius", gs.frobenius());
    if (opt.show_apery) {
        rep.set("apery", apery_set(g, g.smallest()).elements_sorted());
    }
    if (opt.show_gaps) {
        rep.set("gaps", gs.values());
    }
    rep.method = to_string(ParityMethod::compound_corollary);

    rep.line("difference: " + std::to_string(diff));
    rep.line("odd gaps: " + std::to_string((gs.genus() + diff) / 2));
    rep.line("even gaps: " + std::to_string((gs.genus() - diff) / 2));
    rep.line("genus: " + std::to_string(gs.genus()));
    rep.line("frobenius: " + std::to_string(gs.frobenius()));
    if (opt.show_apery) {
        rep.line("apery(" + std::to_string(g.smallest()) +
                 "): " + join(apery_set(g, g.smallest()).elements_sorted()));
    }
    if (opt.show_gaps) {
        rep.line("gaps: " + join(gs.values()));
    }
    rep.line("method: " + rep.method);
    return rep;
}

Report run_geometric(std::int64_t a, std::int64_t b, std::int64_t k,
                     const Options& opt) {
    Report rep;
    rep.command = "geometric";
    rep.input = json{{"a", a}, {"b", b}, {"k", k}};
    const std::int64_t diff = parity_difference_geometric(a, b, k);

    const SuitablePair pair =
        validate_pair(std::vector<std::int64_t>(static_cast<std::size_t>(k), a),
                      std::vector<std::int64_t>(static_cast<std::size_t>(k), b));
    const CompoundSequence cs = build_compound(pair);
    if (opt.show_sequence) {
        rep.set("sequence", cs.terms);
        rep.line("sequence: " + join(cs.terms));
    }

    const GeneratorSequence g = validate_generators(cs.terms);
    const GapSet gs = gaps(g);
    rep.set("difference", diff);
    rep.set("odd", (gs.genus() + diff) / 2);
    rep.set("even", (gs.genus() - diff) / 2);
    rep.set("genus", gs.genus());
    rep.set("frobenius", gs.frobenius());
    if (opt.show_gaps) {
        rep.set("gaps", gs.values());
    }
    rep.method = to_string(ParityMethod::geometric_corollary);

    rep.line("difference: " + std::to_string(diff));
    rep.line("genus: " + std::to_string(gs.genus()));
    rep.line("frobenius: " + std::to_string(gs.frobenius()));
    if (opt.show_gaps) {
        rep.line("gaps: " + join(gs.values()));
    }
    rep.line("method: " + rep.method);
    return rep;
}

// Cross-checks every closed form applicable to the input against the
// brute-force oracle. A mismatch is an internal invariant violation, so it
// is reported with exit code 3, not 1. --inject-fault corrupts the first
// closed-form value to let tests exercise that path.
Report run_verify_gens(const std::vector<std::int64_t>& gens, const Options& opt) {
    Report rep;
    rep.command = "verify";
    rep.input = json{{"generators", gens}};
    const GeneratorSequence g = validate_generators(gens);

    const std::vector<std::int64_t> oracle_gaps = oracle::sieve_gaps(gens);
    const std::int64_t oracle_diff = oracle::sieve_parity_difference(gens);
    const GapSet gs = gaps(g);

    rep.checks.push_back({"gap_set", gs.values() == oracle_gaps,
                          "core " + std::to_string(gs.genus()) + " gaps == oracle " +
                              std::to_string(oracle_gaps.size()) + " gaps"});

    // Smallest odd and even elements both exist: frobenius+1 and
    // frobenius+2 are members of opposite parities.
    std::int64_t t_odd = 0;
    std::int64_t t_even = 0;
    for (std::int64_t n = 1; t_odd == 0 || t_even == 0; ++n) {
        if (!contains(g, n)) {
            continue;
        }
        if (n % 2 != 0 && t_odd == 0) {
            t_odd = n;
        }
        if (n % 2 == 0 && t_even == 0) {
            t_even = n;
        }
    }

    bool faulted = !opt.inject_fault;
    const auto corrupt = [&faulted](std::int64_t v) {
        if (!faulted) {
            faulted = true;
            return v + 1;
        }
        return v;
    };

    for (auto [label, t] : {std::pair<const char*, std::int64_t>{"parity_odd_t", t_odd},
                            {"parity_even_t", t_even}}) {
        const std::int64_t diff = corrupt(parity_difference_via_apery(g, t).difference);
        rep.checks.push_back({std::string(label) + "(t=" + std::to_string(t) + ")",
                              diff == oracle_diff,
                              "closed-form " + std::to_string(diff) + " == oracle " +
                                  std::to_string(oracle_diff)});
    }

    const TelescopicAnalysis an = analyze_sequence(gens);
    if (an.is_telescopic) {
        const std::int64_t diff = corrupt(parity_difference_free(an));
        rep.checks.push_back({"free_theorem", diff == oracle_diff,
                              "closed-form " + std::to_string(diff) + " == oracle " +
                                  std::to_string(oracle_diff)});
    }

    rep.set("difference", oracle_diff);
    rep.set("genus", gs.genus());
    rep.set("frobenius", gs.frobenius());
    rep.method = "oracle";
    rep.line("generators: " + join(gens));
    return rep;
}

Report run_verify_pair(const std::vector<std::int64_t>& a,
                       const std::vector<std::int64_t>& b, const Options& opt) {
    Report rep;
    rep.command = "verify";
    rep.input = json{{"a", a}, {"b", b}};
    const SuitablePair pair = validate_pair(a, b);
    const CompoundSequence cs = build_compound(pair);

    const std::int64_t oracle_diff = oracle::sieve_parity_difference(cs.terms);

    bool faulted = !opt.inject_fault;
    const auto corrupt = [&faulted](std::int64_t v) {
        if (!faulted) {
            faulted = true;
            return v + 1;
        }
        return v;
    };

    const std::int64_t comp = corrupt(parity_difference_compound(pair));
    rep.checks.push_back({"compound_corollary", comp == oracle_diff,
                          "closed-form " + std::to_string(comp) + " == oracle " +
                              std::to_string(oracle_diff)});

    const TelescopicAnalysis an = analyze_sequence(cs.terms);
    const std::int64_t free_diff = corrupt(parity_difference_free(an));
    rep.checks.push_back({"free_theorem", free_diff == oracle_diff,
                          "closed-form " + std::to_string(free_diff) + " == oracle " +
                              std::to_string(oracle_diff)});

    const TelescopicAnalysis rev = reverse_to_odd_initial(pair);
    const std::int64_t rev_diff = corrupt(parity_difference_free(rev));
    rep.checks.push_back({"reversal", rev_diff == oracle_diff,
                          "closed-form " + std::to_string(rev_diff) + " == oracle " +
                              std::to_string(oracle_diff)});

    rep.set("sequence", cs.terms);
    rep.set("difference", oracle_diff);
    rep.method = "oracle";
    rep.line("sequence: " + join(cs.terms));
    return rep;
}

// Builds the CLI grammar, runs one request, writes the report. Returns the
// process exit code. Batch mode re-enters here once per input line.
int run_request(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"odd/even gap distribution of numerical semigroups"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"plain", "structured"}))
        ->capture_default_str();

    std::vector<std::int64_t> gens;
    std::vector<std::int64_t> terms;
    std::vector<std::int64_t> pair_a;
    std::vector<std::int64_t> pair_b;
    std::int64_t apery_t = 0;
    std::int64_t geo_a = 0;
    std::int64_t geo_b = 0;
    std::int64_t geo_k = 0;

    const auto add_show_apery = [&](CLI::App* c) {
        c->add_flag("--show-apery", opt.show_apery, "include the Apery set");
    };
    const auto add_show_gaps = [&](CLI::App* c) {
        c->add_flag("--show-gaps", opt.show_gaps, "include the gap set");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "full report for a generating sequence");
    analyze->fallthrough();
    analyze->add_option("--gens", gens, "comma-separated generators")->required()->delimiter(',');
    add_show_apery(analyze);
    add_show_gaps(analyze);

    CLI::App* apery = app.add_subcommand("apery", "Apery set relative to an element");
    apery->fallthrough();
    apery->add_option("--gens", gens, "comma-separated generators")->required()->delimiter(',');
    apery->add_option("--t", apery_t, "element the set is relative to")->required();

    CLI::App* gaps_cmd = app.add_subcommand("gaps", "gap set, genus, Frobenius number");
    gaps_cmd->fallthrough();
    gaps_cmd->add_option("--gens", gens, "comma-separated generators")->required()->delimiter(',');

    CLI::App* parity = app.add_subcommand("parity", "odd/even gap distribution");
    parity->fallthrough();
    parity->add_option("--gens", gens, "comma-separated generators")->required()->delimiter(',');
    add_show_apery(parity);
    add_show_gaps(parity);

    CLI::App* telescopic = app.add_subcommand("telescopic", "telescopy analysis of a sequence");
    telescopic->fallthrough();
    telescopic->add_option("--terms", terms, "comma-separated terms")->required()->delimiter(',');
    add_show_gaps(telescopic);

    CLI::App* compound = app.add_subcommand("compound", "compound sequence from a suitable pair");
    compound->fallthrough();
    compound->add_option("--a", pair_a, "first sequence of the pair")->required()->delimiter(',');
    compound->add_option("--b", pair_b, "second sequence of the pair")->required()->delimiter(',');
    compound->add_flag("--show-sequence", opt.show_sequence, "include the compound sequence");
    add_show_apery(compound);
    add_show_gaps(compound);

    CLI::App* geometric = app.add_subcommand("geometric", "geometric semigroup <a^k, ..., b^k>");
    geometric->fallthrough();
    geometric->add_option("--a", geo_a, "first ratio term")->required();
    geometric->add_option("--b", geo_b, "second ratio term")->required();
    geometric->add_option("--k", geo_k, "exponent")->required();
    geometric->add_flag("--show-sequence", opt.show_sequence, "include the generating sequence");
    add_show_gaps(geometric);

    CLI::App* verify = app.add_subcommand("verify", "cross-check closed forms against the oracle");
    verify->fallthrough();
    verify->add_option("--gens", gens, "comma-separated generators")->delimiter(',');
    verify->add_option("--a", pair_a, "first sequence of the pair")->delimiter(',');
    verify->add_option("--b", pair_b, "second sequence of the pair")->delimiter(',');
    verify->add_flag("--inject-fault", opt.inject_fault)->group(""); // test hook

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitSuccess;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsageError;
    }

    try {
        Report rep;
        if (*analyze) {
            rep = run_analyze(gens, opt);
        } else if (*apery) {
            rep = run_apery(gens, apery_t);
        } else if (*gaps_cmd) {
            rep = run_gaps(gens);
        } else if (*parity) {
            rep = run_parity(gens, opt);
        } else if (*telescopic) {
            rep = run_telescopic(terms, opt);
        } else if (*compound) {
            rep = run_compound(pair_a, pair_b, opt);
        } else if (*geometric) {
            rep = run_geometric(geo_a, geo_b, geo_k, opt);
        } else if (*verify) {
            const bool has_gens = !gens.empty();
            const bool has_pair = !pair_a.empty() || !pair_b.empty();
            if (has_gens == has_pair) {
                err << "usage error: verify needs either --gens or --a/--b\n";
                return kExitUsageError;
            }
            rep = has_gens ? run_verify_gens(gens, opt) : run_verify_pair(pair_a, pair_b, opt);
            std::string body = rep.render(opt.format);
            if (!rep.all_checks_ok()) {
                if (opt.format == "plain") {
                    body += "verdict: closed form disagrees with oracle\n";
                }
                out << body;
                err << "internal error: InternalInconsistency: closed form "
                       "disagrees with oracle\n";
                return kExitInternalError;
            }
            if (opt.format == "plain") {
                body += "verdict: all checks passed\n";
            }
            out << body;
            return kExitSuccess;
        }
        out << rep.render(opt.format);
        return kExitSuccess;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

// One request per line, outputs concatenated in input order regardless of
// completion order. Exit code is the most severe of the per-line codes.
int run_batch(const std::string& path, unsigned jobs) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "usage error: cannot open batch file " << path << "\n";
        return kExitUsageError;
    }
    std::vector<std::vector<std::string>> requests;
    std::string line;
    while (std::getline(in, line)) {
        auto args = split_line(line);
        if (args.empty() || args.front().front() == '#') {
            continue;
        }
        requests.push_back(std::move(args));
    }

    std::vector<std::string> outs(requests.size());
    std::vector<std::string> errs(requests.size());
    std::vector<int> codes(requests.size(), 0);

    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= requests.size()) {
                return;
            }
            std::ostringstream o;
            std::ostringstream e;
            codes[i] = run_request(requests[i], o, e);
            outs[i] = o.str();
            errs[i] = e.str();
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    int exit_code = kExitSuccess;
    for (std::size_t i = 0; i < requests.size(); ++i) {
        std::cout << outs[i];
        std::cerr << errs[i];
        exit_code = std::max(exit_code, codes[i]);
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);

    // Batch mode owns the whole invocation; everything else is one request.
    if (!args.empty() && (args[0] == "--batch" || args[0] == "-B")) {
        std::string path;
        unsigned jobs = 1;
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (args[i] == "--batch" || args[i] == "-B") {
                if (i + 1 >= args.size()) {
                    std::cerr << "usage error: --batch needs a file\n";
                    return kExitUsageError;
                }
                path = args[++i];
            } else if (args[i] == "--jobs" || args[i] == "-j") {
                if (i + 1 >= args.size()) {
                    std::cerr << "usage error: --jobs needs a count\n";
                    return kExitUsageError;
                }
                try {
                    jobs = static_cast<unsigned>(std::stoul(args[i + 1]));
                } catch (const std::exception&) {
                    std::cerr << "usage error: --jobs needs a positive count\n";
                    return kExitUsageError;
                }
                ++i;
            } else {
                std::cerr << "usage error: unknown batch option " << args[i] << "\n";
                return kExitUsageError;
            }
        }
        return run_batch(path, jobs == 0 ? 1 : jobs);
    }

    return run_request(args, std::cout, std::cerr);
}
