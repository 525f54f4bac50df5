// Command-line front end: build truncations of the example categories,
// print exact operator matrices, export Hasse diagrams, classify the
// commutator, build universal covers, and run the full identity suite.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "updown/build.hpp"
#include "updown/decode.hpp"
#include "updown/dot_export.hpp"
#include "updown/operators.hpp"
#include "updown/reports.hpp"

using namespace updown;

namespace {

constexpr int kExitFailure = 1;  // an identity or covering check failed
constexpr int kExitUsage = 2;    // bad arguments, caps, preconditions

struct CommonOpts {
    std::string example;
    std::vector<std::string> params;
    int max_level = 0;
    std::string format = "text";
    std::string output;
    bool force = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_level = true) {
    cmd->add_option("--example", opts.example, "family tag (young, kingman, necklaces, ...)")
        ->required();
    cmd->add_option("--param", opts.params, "family parameter, e.g. n=3 or c=2");
    if (with_level) cmd->add_option("--max-level", opts.max_level, "truncation depth (default: family cap)");
    cmd->add_option("--format", opts.format, "text, json, csv or dot")
        ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
    cmd->add_option("--output", opts.output, "write to file instead of stdout");
    cmd->add_flag("--force", opts.force, "permit exceeding the documented level cap");
}

FamilyRunConfig to_config(const CommonOpts& opts) {
    FamilyRunConfig config;
    config.family = family_from_name(opts.example);
    for (const auto& raw : opts.params) {
        auto eq = raw.find('=');
        if (eq == std::string::npos)
            throw ArgumentError("param must look like n=3 or c=2: " + raw);
        std::string key = raw.substr(0, eq);
        int value = std::stoi(raw.substr(eq + 1));
        if (key == "n")
            config.params.n = value;
        else if (key == "c")
            config.params.c = value;
        else
            throw ArgumentError("unknown param '" + key + "' (expected n or c)");
    }
    // Params are required exactly when the family needs them.
    const bool needs_n =
        config.family == Family::subsets || config.family == Family::monomials;
    const bool needs_c = config.family == Family::necklaces;
    if (needs_n && !config.params.n)
        throw ArgumentError(opts.example + " requires --param n=<arity>");
    if (needs_c && !config.params.c)
        throw ArgumentError(opts.example + " requires --param c=<colors>");
    if (!needs_n && config.params.n)
        throw ArgumentError(opts.example + " takes no parameter n");
    if (!needs_c && config.params.c)
        throw ArgumentError(opts.example + " takes no parameter c");
    config.max_level = opts.max_level;
    config.force = opts.force;
    if (opts.force)
        std::cerr << "warning: --force lifts the documented level cap for " << opts.example
                  << "\n";
    return config;
}

void write_out(const CommonOpts& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opts.output, std::ios::binary);
    if (!f) throw ArgumentError("cannot open output file: " + opts.output);
    f << text;
}

OrderedJson json_header(const char* command, const RankedStructure& S) {
    OrderedJson j;
    j["schema"] = 1;
    j["command"] = command;
    j["family"] = family_name(S.spec().family);
    OrderedJson params = OrderedJson::object();
    if (S.spec().n) params["n"] = *S.spec().n;
    if (S.spec().c) params["c"] = *S.spec().c;
    j["params"] = params;
    j["max_level"] = S.max_level();
    return j;
}

int cmd_enumerate(const CommonOpts& opts) {
    RankedStructure S = build_for(to_config(opts));
    if (opts.format == "json") {
        OrderedJson j = json_header("enumerate", S);
        OrderedJson levels = OrderedJson::array();
        for (int n = 0; n <= S.max_level(); ++n) {
            const auto& lvl = S.level(n);
            OrderedJson entry;
            entry["level"] = n;
            entry["count"] = lvl.size();
            OrderedJson objs = OrderedJson::array();
            for (std::size_t i = 0; i < lvl.size(); ++i) {
                OrderedJson o;
                o["encoding"] = lvl.objects[i].encoding;
                o["aut"] = lvl.aut_orders[i].str();
                objs.push_back(o);
            }
            entry["objects"] = objs;
            levels.push_back(entry);
        }
        j["levels"] = levels;
        write_out(opts, j.dump(2) + "\n");
    } else if (opts.format == "csv") {
        std::string out = "level,encoding,aut\n";
        for (int n = 0; n <= S.max_level(); ++n) {
            const auto& lvl = S.level(n);
            for (std::size_t i = 0; i < lvl.size(); ++i)
                out += std::to_string(n) + "," + lvl.objects[i].encoding + "," +
                       lvl.aut_orders[i].str() + "\n";
        }
        write_out(opts, out);
    } else {
        std::string out;
        for (int n = 0; n <= S.max_level(); ++n) {
            const auto& lvl = S.level(n);
            out += "level " + std::to_string(n) + " (" + std::to_string(lvl.size()) +
                   (lvl.size() == 1 ? " object" : " objects") + ")\n";
            for (std::size_t i = 0; i < lvl.size(); ++i)
                out += "  " + to_display(lvl.objects[i]) + "  |Aut| = " +
                       lvl.aut_orders[i].str() + "\n";
        }
        write_out(opts, out);
    }
    return 0;
}

int cmd_matrix(const CommonOpts& opts, const std::string& op, int at) {
    RankedStructure S = build_for(to_config(opts));
    if (at < 0 || at > S.max_level()) throw ArgumentError("--at level outside the truncation");
    const bool up = op == "U";
    if (up && at >= S.max_level())
        throw ArgumentError("U at the truncation boundary is undefined; raise --max-level");
    if (!up && at == 0) throw ArgumentError("D at level 0 is the zero map onto nothing");

    const auto& rows = S.level(at);
    const auto& cols = S.level(up ? at + 1 : at - 1);
    // entry(p, q) = u(p;q) for U, d(q;p) for D: the coefficient the operator
    // produces on basis object p at column object q.
    std::vector<std::vector<BigInt>> entries(rows.size(),
                                             std::vector<BigInt>(cols.size(), BigInt(0)));
    auto edges = up ? S.up_edges(at) : S.up_edges(at - 1);
    for (const UpEdge& e : edges) {
        if (up)
            entries[e.src][e.dst] = e.rec.u;
        else
            entries[e.dst][e.src] = e.rec.d;
    }

    if (opts.format == "json") {
        OrderedJson j = json_header("matrix", S);
        j["operator"] = op;
        j["at"] = at;
        OrderedJson rk = OrderedJson::array(), ck = OrderedJson::array();
        for (const auto& o : rows.objects) rk.push_back(o.encoding);
        for (const auto& o : cols.objects) ck.push_back(o.encoding);
        j["rows"] = rk;
        j["cols"] = ck;
        OrderedJson m = OrderedJson::array();
        for (const auto& row : entries) {
            OrderedJson r = OrderedJson::array();
            for (const auto& v : row) r.push_back(v.str());
            m.push_back(r);
        }
        j["entries"] = m;
        write_out(opts, j.dump(2) + "\n");
    } else if (opts.format == "csv") {
        std::string out = "row";
        for (const auto& o : cols.objects) out += "," + to_display(o);
        out += "\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out += to_display(rows.objects[i]);
            for (std::size_t jx = 0; jx < cols.size(); ++jx) out += "," + entries[i][jx].str();
            out += "\n";
        }
        write_out(opts, out);
    } else {
        std::string out = op + " from level " + std::to_string(at) + ": " +
                          std::to_string(rows.size()) + " x " + std::to_string(cols.size()) +
                          "\n";
        out += "cols:";
        for (const auto& o : cols.objects) out += " " + to_display(o);
        out += "\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out += to_display(rows.objects[i]) + ": [";
            for (std::size_t jx = 0; jx < cols.size(); ++jx) {
                if (jx) out += " ";
                out += entries[i][jx].str();
            }
            out += "]\n";
        }
        write_out(opts, out);
    }
    return 0;
}

int cmd_classify(const CommonOpts& opts) {
    RankedStructure S = build_for(to_config(opts));
    CommutatorReport report = commutator_classify(S);
    if (opts.format == "json") {
        OrderedJson j = json_header("classify", S);
        j["classification"] = classification_to_json(report);
        write_out(opts, j.dump(2) + "\n");
    } else {
        write_out(opts, report.summary() + "\n");
    }
    return 0;
}

int cmd_verify(const CommonOpts& opts) {
    VerifyRun run = run_family_verify(to_config(opts));
    if (opts.format == "json") {
        write_out(opts, run.json.dump(2) + "\n");
    } else if (opts.format == "csv") {
        std::string out = "check,status,counterexample\n";
        for (const auto& c : run.json["checks"]) {
            std::string detail =
                c.contains("counterexample") ? c["counterexample"].get<std::string>() : "";
            for (char& ch : detail)
                if (ch == ',') ch = ';';
            out += c["check"].get<std::string>() + "," + c["status"].get<std::string>() + "," +
                   detail + "\n";
        }
        write_out(opts, out);
    } else {
        std::string out;
        for (const auto& c : run.json["checks"]) {
            out += c["status"].get<std::string>() + "  " + c["check"].get<std::string>();
            if (c.contains("counterexample"))
                out += "  [" + c["counterexample"].get<std::string>() + "]";
            out += "\n";
        }
        out += "overall: " + run.json["overall"].get<std::string>() + "\n";
        write_out(opts, out);
    }
    return run.pass ? 0 : kExitFailure;
}

int cmd_cover(const CommonOpts& opts, const std::string& quotient, bool decode) {
    // Chain counts grow quickly (the compositions cover at level 8 already
    // has half a million objects), so the cover depth defaults to 6.
    FamilyRunConfig config = to_config(opts);
    if (opts.max_level == 0)
        config.max_level = std::min(default_level_cap(config.family), 6);
    RankedStructure S = build_for(config);
    RankedStructure base = S;
    if (quotient == "up")
        base = up_quotient(S);
    else if (quotient == "down")
        base = down_quotient(S);
    else if (!quotient.empty())
        throw ArgumentError("--quotient must be up or down");

    CoveringMapData map = universal_cover(base, base.max_level());
    VerificationReport checks = verify_covering(map);

    std::optional<DecodeFamily> dec;
    if (decode) {
        std::string name = opts.example;
        if (family_from_name(opts.example) == Family::kingman)
            name += quotient == "down" ? "_down" : "_up";
        if (family_from_name(opts.example) == Family::rooted_trees && quotient == "down")
            name = "rooted_trees_down";
        dec = decode_family_from_name(name);
    }

    if (opts.format == "dot") {
        write_out(opts, cover_to_dot(map, opts.example + "_cover"));
    } else if (opts.format == "json") {
        OrderedJson j = json_header("cover", S);
        if (!quotient.empty()) j["quotient"] = quotient;
        OrderedJson levels = OrderedJson::array();
        for (int n = 0; n <= map.total.max_level(); ++n)
            levels.push_back(map.total.level(n).size());
        j["level_counts"] = levels;
        OrderedJson objs = OrderedJson::array();
        for (int n = 0; n <= map.total.max_level(); ++n)
            for (const auto& p : map.total.level(n).objects) {
                OrderedJson o;
                o["cover_encoding"] = p.encoding;
                o["base_encoding"] = map.projection.at(p).encoding;
                if (dec) o["decoded_label"] = decode_cover(*dec, map.chains.at(p));
                objs.push_back(o);
            }
        j["objects"] = objs;
        OrderedJson cj = OrderedJson::array();
        for (const auto& c : checks.checks) {
            OrderedJson e;
            e["check"] = c.name;
            e["status"] = c.pass ? "pass" : "fail";
            if (!c.detail.empty()) e["counterexample"] = c.detail;
            cj.push_back(e);
        }
        j["checks"] = cj;
        j["overall"] = checks.all_pass() ? "pass" : "fail";
        write_out(opts, j.dump(2) + "\n");
    } else {
        std::string out = "cover of " + opts.example;
        if (!quotient.empty()) out += " (" + quotient + "-quotient)";
        out += "\nlevel counts:";
        for (int n = 0; n <= map.total.max_level(); ++n)
            out += " " + std::to_string(map.total.level(n).size());
        out += "\n";
        if (dec) {
            for (int n = 0; n <= map.total.max_level(); ++n)
                for (const auto& p : map.total.level(n).objects)
                    out += "  " + to_display(p) + " -> " +
                           to_display(map.projection.at(p)) + "  " +
                           decode_cover(*dec, map.chains.at(p)) + "\n";
        }
        for (const auto& c : checks.checks)
            out += (c.pass ? "pass  " : "fail  ") + c.name +
                   (c.detail.empty() ? "" : "  [" + c.detail + "]") + "\n";
        write_out(opts, out);
    }
    return checks.all_pass() ? 0 : kExitFailure;
}

int cmd_word(const CommonOpts& opts, const std::string& word, const std::string& target) {
    RankedStructure S = build_for(to_config(opts));
    int balance = 0;
    for (char ch : word) balance += ch == 'U' ? 1 : (ch == 'D' ? -1 : 0);
    ObjectKey p{S.spec().family, balance, target};
    if (!S.contains(p))
        throw ArgumentError("no object with encoding '" + target + "' at level " +
                            std::to_string(balance));
    CommutatorReport report = commutator_classify(S);
    WordEvaluation ev =
        valid_word_evaluate(S, word, p, report.at_least(CommutationKind::SCC) ? &report : nullptr);
    if (opts.format == "json") {
        OrderedJson j = json_header("word", S);
        j["word"] = word;
        j["target"] = target;
        j["value"] = to_string(ev.value);
        if (ev.prediction) {
            j["prediction"] = to_string(*ev.prediction);
            j["matches"] = ev.matches();
        }
        write_out(opts, j.dump(2) + "\n");
    } else {
        std::string out = "<" + word + " 0^, " + to_display(p) + "> = " + to_string(ev.value);
        if (ev.prediction)
            out += "  (product formula: " + to_string(*ev.prediction) +
                   (ev.matches() ? ", matches" : ", MISMATCH") + ")";
        write_out(opts, out + "\n");
    }
    return ev.matches() ? 0 : kExitFailure;
}

int cmd_export(const CommonOpts& opts) {
    RankedStructure S = build_for(to_config(opts));
    write_out(opts, structure_to_dot(S, opts.example));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact updown-category truncations: operators, covers, identities"};
    app.require_subcommand(1);

    CommonOpts enum_opts, matrix_opts, classify_opts, verify_opts, cover_opts, word_opts,
        export_opts;
    std::string matrix_op, cover_quotient, word_word, word_target;
    int matrix_at = 0;
    bool cover_decode = false;

    add_common(app.add_subcommand("enumerate", "list levels with aut orders"), enum_opts);

    auto* matrix = app.add_subcommand("matrix", "print the exact U or D matrix from a level");
    matrix->add_option("operator", matrix_op, "U or D")->required()->check(CLI::IsMember({"U", "D"}));
    matrix->add_option("--at", matrix_at, "source level")->required();
    add_common(matrix, matrix_opts);

    add_common(app.add_subcommand("classify", "commutator classification"), classify_opts);
    add_common(app.add_subcommand("verify", "structural checks + identity suite"), verify_opts);

    auto* cover = app.add_subcommand("cover", "universal cover: build, verify, decode");
    cover->add_option("--quotient", cover_quotient, "up or down (for non-unilateral families)");
    cover->add_flag("--decode", cover_decode, "decode chains into named objects");
    add_common(cover, cover_opts);

    auto* word = app.add_subcommand("word", "evaluate a U/D word at 0^ against a target");
    word->add_option("--word", word_word, "letters U/D, rightmost applies first")->required();
    word->add_option("--target", word_target, "target object encoding");
    add_common(word, word_opts);

    add_common(app.add_subcommand("export", "DOT Hasse diagram"), export_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("enumerate")) return cmd_enumerate(enum_opts);
        if (app.got_subcommand("matrix")) return cmd_matrix(matrix_opts, matrix_op, matrix_at);
        if (app.got_subcommand("classify")) return cmd_classify(classify_opts);
        if (app.got_subcommand("verify")) return cmd_verify(verify_opts);
        if (app.got_subcommand("cover")) return cmd_cover(cover_opts, cover_quotient, cover_decode);
        if (app.got_subcommand("word")) return cmd_word(word_opts, word_word, word_target);
        if (app.got_subcommand("export")) return cmd_export(export_opts);
    } catch (const InvariantError& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
