#include "splitcycle/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "splitcycle/errors.hpp"
#include "splitcycle/graphs.hpp"
#include "splitcycle/json_io.hpp"
#include "splitcycle/witness.hpp"

namespace splitcycle {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Profile read_profile(const std::string& path) {
    try {
        return parse_profile(read_file(path));
    } catch (const ParseError& e) {
        throw Error(path + ": " + e.what());
    }
}

std::vector<Candidate> split_tokens(const std::string& text) {
    std::vector<Candidate> out;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

struct DomainFlags {
    std::string candidates;
    std::string voters = "1..3";
    std::string mode = "exhaustive-multiset";
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;

    void attach(CLI::App* app) {
        app->add_option("--domain-candidates,--candidates", candidates, "Candidate tokens, comma separated");
        app->add_option("--domain-voters", voters, "Voter counts as <min>..<max>")->capture_default_str();
        app->add_option("--domain-mode", mode, "exhaustive-multiset, exhaustive-sequence or random")
            ->capture_default_str();
        app->add_option("--samples", samples, "Profiles drawn in random mode")->capture_default_str();
        app->add_option("--seed", seed, "Seed for random mode")->capture_default_str();
        app->add_option("--budget", budget, "Largest number of profiles to enumerate")->capture_default_str();
    }

    ProfileDomain build() const {
        ProfileDomain d;
        d.candidates = split_tokens(candidates);
        if (d.candidates.empty()) throw Error("--domain-candidates is required");
        std::tie(d.min_voters, d.max_voters) = parse_voter_range(voters);
        d.mode = parse_mode(mode);
        d.samples = samples;
        d.seed = seed;
        d.budget = budget;
        d.validate();
        return d;
    }
};

void write_table(std::ostream& out, std::string_view method, const Profile& p, const DefeatRelation& d) {
    const auto& c = p.candidates();
    const auto m = margins(p);
    std::size_t width = 4;
    for (const auto& name : c) width = std::max(width, name.size() + 2);

    out << "method: " << method << "\n";
    out << "profile (" << p.num_voters() << " voters):\n";
    for (const auto& [count, r] : anonymized(p)) {
        out << "  " << std::setw(5) << count << "  ";
        for (std::size_t k = 0; k < r.size(); ++k) out << (k ? " > " : "") << c[r[k]];
        out << "\n";
    }
    out << "margins:\n  " << std::setw(static_cast<int>(width)) << "";
    for (const auto& name : c) out << std::setw(static_cast<int>(width)) << name;
    out << "\n";
    for (std::size_t x = 0; x < c.size(); ++x) {
        out << "  " << std::setw(static_cast<int>(width)) << c[x];
        for (std::size_t y = 0; y < c.size(); ++y) out << std::setw(static_cast<int>(width)) << m(x, y);
        out << "\n";
    }
    out << "defeats:";
    const auto pairs = d.pairs();
    if (pairs.empty()) out << " none";
    for (const auto& [from, to] : pairs) out << " " << from << ">" << to;
    out << "\nwinners:";
    for (const auto& w : d.undefeated()) out << " " << w;
    out << "\n";
}

int cmd_tabulate(const std::vector<std::string>& methods, const std::string& format, const std::string& path,
                 std::ostream& out) {
    const auto p = read_profile(path);
    std::vector<MethodId> ids;
    for (const auto& m : methods) ids.push_back(parse_method(m));
    if (ids.empty()) ids.push_back(MethodId::split_cycle);

    if (format == "json") {
        Json all = Json::array();
        for (auto id : ids) all.push_back(defeat_json(method_name(id), p, defeat(id, p)));
        out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
    } else if (format == "table") {
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (i) out << "\n";
            write_table(out, method_name(ids[i]), p, defeat(ids[i], p));
        }
    } else if (format == "dot") {
        if (ids.size() != 1) throw Error("--format dot takes exactly one --method");
        out << to_dot(margin_graph(p), defeat(ids[0], p));
    } else {
        throw Error("unknown format '" + format + "'");
    }
    return kExitOk;
}

int cmd_axioms(const std::string& axiom_text, const std::string& method, const DomainFlags& flags,
               const std::string& pairs_path, std::ostream& out) {
    const auto axiom = parse_axiom(axiom_text);
    const auto f = find_vccr(method);
    if (!f) throw Error("unknown method '" + method + "'");

    AxiomVerdict v;
    if (!pairs_path.empty()) {
        const auto pairs = parse_pairs_json(read_file(pairs_path));
        const auto allowed = split_tokens(flags.candidates);
        if (!allowed.empty()) {
            for (const auto& [p, q] : pairs)
                for (const auto* prof : {&p, &q})
                    for (const auto& c : prof->candidates())
                        if (std::find(allowed.begin(), allowed.end(), c) == allowed.end())
                            throw Error("pair profile uses candidate '" + c + "' outside --candidates");
        }
        v = check_pairs(axiom, *f, pairs);
    } else {
        v = check_axiom(axiom, *f, flags.build());
    }
    out << verdict_json(v).dump(2) << "\n";
    switch (v.status) {
        case VerdictStatus::holds_on_domain: return kExitOk;
        case VerdictStatus::counterexample: return kExitViolation;
        case VerdictStatus::budget_exceeded: return kExitBudget;
    }
    return kExitOk;
}

int cmd_witness(const std::string& target, bool list, std::ostream& out) {
    if (list) {
        for (const auto& n : builtin_witness_names()) out << n << "\n";
        return kExitOk;
    }
    std::vector<WitnessCase> cases;
    if (target.empty()) {
        for (const auto& n : builtin_witness_names()) cases.push_back(builtin_witness(n));
    } else if (std::find(builtin_witness_names().begin(), builtin_witness_names().end(), target) !=
               builtin_witness_names().end()) {
        cases.push_back(builtin_witness(target));
    } else if (std::filesystem::exists(target)) {
        cases.push_back(parse_witness(read_file(target)));
    } else {
        throw Error("unknown witness case '" + target + "' (not a built-in name or a file)");
    }
    Json all = Json::array();
    bool pass = true;
    for (const auto& w : cases) {
        const auto report = verify_witness(w);
        pass = pass && report.pass;
        all.push_back(report_json(report));
    }
    out << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
    return pass ? kExitOk : kExitViolation;
}

int cmd_synth(const std::string& path, std::ostream& out) {
    const auto g = parse_graph_json(read_file(path));
    out << to_vote_text(realize_margin_graph(g));
    return kExitOk;
}

int cmd_export_dot(const std::string& path, const std::string& method, std::ostream& out) {
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
        out << to_dot(parse_graph_json(read_file(path)));
        return kExitOk;
    }
    const auto p = read_profile(path);
    if (method == "none") {
        out << to_dot(margin_graph(p));
    } else {
        out << to_dot(margin_graph(p), defeat(parse_method(method), p));
    }
    return kExitOk;
}

int cmd_enumerate(const DomainFlags& flags, const std::vector<std::string>& methods, std::ostream& out) {
    const auto domain = flags.build();
    require_within_budget(domain);
    std::vector<MethodId> ids;
    for (const auto& m : methods) ids.push_back(parse_method(m));

    auto tally = [&](const ProfileDomain& d, Json& row) {
        std::uint64_t total = 0, condorcet = 0, cycles = 0;
        std::vector<std::uint64_t> unique(ids.size(), 0);
        for_each_profile(d, [&](const Profile& p) {
            ++total;
            if (condorcet_winner(p)) ++condorcet;
            if (!simple_cycles(margin_graph(p)).empty()) ++cycles;
            for (std::size_t i = 0; i < ids.size(); ++i)
                if (defeat(ids[i], p).undefeated().size() == 1) ++unique[i];
            return true;
        });
        row["profiles"] = total;
        row["condorcet_winner"] = condorcet;
        row["majority_cycle"] = cycles;
        if (!ids.empty()) {
            Json u;
            for (std::size_t i = 0; i < ids.size(); ++i) u[std::string(method_name(ids[i]))] = unique[i];
            row["unique_winner"] = std::move(u);
        }
    };

    if (domain.mode == DomainMode::random) {
        Json row;
        row["voters"] = std::to_string(domain.min_voters) + ".." + std::to_string(domain.max_voters);
        tally(domain, row);
        out << row.dump() << "\n";
        return kExitOk;
    }
    for (std::size_t v = domain.min_voters; v <= domain.max_voters; ++v) {
        auto d = domain;
        d.min_voters = d.max_voters = v;
        Json row;
        row["voters"] = v;
        tally(d, row);
        out << row.dump() << "\n" << std::flush;
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Split Cycle and related voting rules: tabulation, axiom checks, witnesses", "splitcycle"};
    app.require_subcommand(1);

    std::vector<std::string> methods;
    std::string format = "json", file, method = "split_cycle", axiom, pairs_from, target;
    bool list = false;
    DomainFlags domain;

    auto* tab = app.add_subcommand("tabulate", "Evaluate voting rules on a .vote file");
    tab->add_option("--method", methods, "Rule to evaluate (repeatable; default split_cycle)");
    tab->add_option("--format", format, "json, table or dot")->capture_default_str();
    tab->add_option("file", file, ".vote file")->required();

    auto* ax = app.add_subcommand("axioms", "Check an axiom for a rule over a profile domain");
    ax->add_option("--axiom", axiom, "Axiom name")->required();
    ax->add_option("--method", method, "Rule name")->capture_default_str();
    ax->add_option("--pairs-from", pairs_from, "JSON file of (P, P') pairs to check instead of a domain");
    domain.attach(ax);

    auto* wit = app.add_subcommand("witness", "Replay built-in or user witness cases");
    wit->add_option("case", target, "Built-in case name or witness JSON file (default: all built-ins)");
    wit->add_flag("--list", list, "List built-in cases");

    auto* syn = app.add_subcommand("synth", "Write a .vote profile realizing a margin-graph JSON file");
    syn->add_option("file", file, "Margin graph JSON")->required();

    auto* dot = app.add_subcommand("export-dot", "Write the margin graph of a .vote or graph JSON file as DOT");
    dot->add_option("--method", method, "Rule whose defeats are highlighted, or none")->capture_default_str();
    dot->add_option("file", file, ".vote or margin graph JSON file")->required();

    auto* en = app.add_subcommand("enumerate", "Stream statistics over a profile domain");
    en->add_option("--method", methods, "Count unique winners under this rule (repeatable)");
    domain.attach(en);

    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    try {
        app.parse(reversed_args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        if (app.get_subcommands().empty()) err << "run with --help for usage\n";
        return kExitUsage;
    }

    try {
        if (tab->parsed()) return cmd_tabulate(methods, format, file, out);
        if (ax->parsed()) return cmd_axioms(axiom, method, domain, pairs_from, out);
        if (wit->parsed()) return cmd_witness(target, list, out);
        if (syn->parsed()) return cmd_synth(file, out);
        if (dot->parsed()) return cmd_export_dot(file, method, out);
        if (en->parsed()) return cmd_enumerate(domain, methods, out);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace splitcycle
