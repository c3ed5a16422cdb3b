// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "intdec/compile.hpp"
#include "intdec/dbm.hpp"
#include "intdec/error.hpp"
#include "intdec/json_io.hpp"

namespace intdec::cli {

namespace {

using frontend::FormulaPtr;
using frontend::VarContext;

struct Options {
    std::vector<std::string> files;
    std::vector<std::string> exprs;
    std::string point;
    std::string format = "json";
    long max_const = 5;
    long var_limit = 0;
};

class Session {
  public:
    Session(const Options& opts, std::istream& in, std::ostream& out) : opts_(opts), in_(in), out_(out) {}

    // Reads the inputs of a command: files (or "-") first, then inline text.
    std::vector<std::string> inputs(std::size_t expected) {
        std::vector<std::string> texts;
        for (const auto& f : opts_.files) texts.push_back(read(f));
        for (const auto& e : opts_.exprs) texts.push_back(e);
        if (texts.size() != expected) {
            throw InvalidArgument("expected " + std::to_string(expected) + " input(s), got " +
                                  std::to_string(texts.size()));
        }
        return texts;
    }

    int decide() {
        FormulaPtr f = frontend::parse(inputs(1)[0]);
        const bool value = frontend::decide(*f);
        out_ << (value ? "TRUE" : "FALSE") << "\n";
        return value ? kTrue : kFalse;
    }

    int sat() {
        FormulaPtr f = frontend::parse(inputs(1)[0]);
        const VarContext ctx = frontend::free_vars(*f);
        const IdfSet set = frontend::compile(*f, ctx);
        auto w = set.witness();
        if (!w) {
            out_ << "UNSAT\n";
            return kFalse;
        }
        out_ << "SAT\n";
        if (!ctx.empty()) out_ << format_point(ctx, *w) << "\n";
        return kTrue;
    }

    int compare(bool inclusion) {
        auto texts = inputs(2);
        FormulaPtr f = frontend::parse(texts[0]);
        FormulaPtr g = frontend::parse(texts[1]);
        const VarContext ctx = frontend::free_vars(*f);
        if (ctx != frontend::free_vars(*g)) throw InvalidArgument("the formulas have different free variables");
        const IdfSet a = frontend::compile(*f, ctx);
        const IdfSet b = frontend::compile(*g, ctx);
        const bool value = inclusion ? subset(a, b) : equals(a, b);
        if (inclusion) {
            out_ << (value ? "SUBSET" : "NOT SUBSET") << "\n";
        } else {
            out_ << (value ? "EQUIVALENT" : "NOT EQUIVALENT") << "\n";
        }
        return value ? kTrue : kFalse;
    }

    int member() {
        FormulaPtr f = frontend::parse(inputs(1)[0]);
        const VarContext ctx = frontend::free_vars(*f);
        const auto values = parse_point(opts_.point);
        RationalVector r;
        for (const auto& v : ctx) {
            auto it = values.find(v.name);
            if (it == values.end()) throw InvalidArgument("--point gives no value for '" + v.name + "'");
            r.push_back(it->second);
        }
        if (values.size() != ctx.size()) throw InvalidArgument("--point names a variable that is not free");
        const bool value = frontend::compile(*f, ctx).contains(r);
        out_ << (value ? "MEMBER" : "NOT MEMBER") << "\n";
        return value ? kTrue : kFalse;
    }

    int stats() {
        FormulaPtr f = frontend::parse(inputs(1)[0]);
        const VarContext ctx = frontend::free_vars(*f);
        const IdfStats s = frontend::compile(*f, ctx).stats();
        out_ << "variables:";
        for (const auto& v : ctx) out_ << " " << v.name;
        out_ << "\ncells: " << s.cells << "\nautomaton states: " << s.automaton_states << "\nregions: " << s.regions
             << "\n";
        return kTrue;
    }

    int export_set() {
        FormulaPtr f = frontend::parse(inputs(1)[0]);
        out_ << json_io::export_idf(frontend::compile(*f, frontend::free_vars(*f))) << "\n";
        return kTrue;
    }

    int cpdbm_decompose() {
        auto ps = json_io::parse_cpdbm(inputs(1)[0]);
        out_ << json_io::export_idf(dbm::decompose(ps)) << "\n";
        return kTrue;
    }

    int demo() {
        using Clock = std::chrono::steady_clock;
        const auto start = Clock::now();
        auto d = dbm::timed_demo(Integer(opts_.max_const));
        const IdfSet zones = dbm::decompose(d.zones);
        const IdfSet formula = frontend::compile(*d.formula, frontend::free_vars(*d.formula));
        const bool same = equals(zones, d.shapes) && equals(formula, d.shapes);
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        out_ << "max constant: " << opts_.max_const << "\n"
             << "decomposed zones: " << zones.cells().size() << " cells\n"
             << "shapes: " << d.shapes.cells().size() << " cells\n"
             << "formula: " << formula.cells().size() << " cells\n"
             << "equal: " << (same ? "yes" : "no") << "\n"
             << "time: " << seconds << " s\n";
        return same ? kTrue : kFalse;
    }

  private:
    std::string read(const std::string& path) {
        std::ostringstream buffer;
        if (path == "-") {
            buffer << in_.rdbuf();
            return buffer.str();
        }
        std::ifstream file(path);
        if (!file) throw InvalidArgument("cannot read '" + path + "'");
        buffer << file.rdbuf();
        return buffer.str();
    }

    static std::map<std::string, Rational> parse_point(const std::string& text) {
        std::map<std::string, Rational> values;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos) throw InvalidArgument("--point entries look like name=value");
            auto trim = [](std::string s) {
                s.erase(0, s.find_first_not_of(" \t"));
                s.erase(s.find_last_not_of(" \t") + 1);
                return s;
            };
            std::string name = trim(item.substr(0, eq));
            if (!values.emplace(name, parse_rational(trim(item.substr(eq + 1)))).second) {
                throw InvalidArgument("--point assigns '" + name + "' twice");
            }
        }
        return values;
    }

    static std::string format_point(const VarContext& ctx, const RationalVector& r) {
        std::string s;
        for (std::size_t k = 0; k < ctx.size(); ++k) {
            if (k > 0) s += ", ";
            s += ctx[k].name + "=" + to_string(r[k]);
        }
        return s;
    }

    const Options& opts_;
    std::istream& in_;
    std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decision procedure for linear arithmetic over mixed reals and integers", "intdec"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opts;
    app.add_option("--var-limit", opts.var_limit, "Maximum number of automaton coordinates")
        ->check(CLI::Range(1, 24));

    auto inputs = [&](CLI::App* cmd, const char* what) {
        cmd->add_option("files", opts.files, std::string(what) + " (\"-\" reads standard input)");
        cmd->add_option("-e,--expr", opts.exprs, "Inline formula text instead of a file");
    };
    auto* decide = app.add_subcommand("decide", "Truth value of a closed formula (TRUE/FALSE)");
    inputs(decide, "Formula file");
    auto* sat = app.add_subcommand("sat", "Satisfiability with a witness point (SAT/UNSAT)");
    inputs(sat, "Formula file");
    auto* equiv = app.add_subcommand("equiv", "Whether two formulas define the same set");
    inputs(equiv, "Formula files");
    auto* subset_cmd = app.add_subcommand("subset", "Whether the first formula's set is included in the second's");
    inputs(subset_cmd, "Formula files");
    auto* member = app.add_subcommand("member", "Whether a point satisfies a formula");
    inputs(member, "Formula file");
    member->add_option("--point", opts.point, "Assignment such as \"x=3/2,y=7\"")->required();
    auto* stats = app.add_subcommand("stats", "Size of the compiled representation");
    inputs(stats, "Formula file");
    auto* exporter = app.add_subcommand("export", "Compiled set as JSON");
    inputs(exporter, "Formula file");
    exporter->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json"}));
    auto* decompose = app.add_subcommand("cpdbm-decompose", "Decompose parametric DBM JSON into set JSON");
    decompose->add_option("files", opts.files, "Parametric DBM JSON file (\"-\" reads standard input)");
    decompose->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json"}));
    auto* demo = app.add_subcommand("demo", "Timed automaton example in three equivalent forms");
    demo->add_option("--max-const", opts.max_const, "Maximal clock constant")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kTrue : kUsageError;
    }

    // the limit is process-wide; restore it for in-process callers
    struct LimitGuard {
        std::size_t saved = presburger::dimension_limit();
        ~LimitGuard() { presburger::set_dimension_limit(saved); }
    } guard;
    try {
        if (opts.var_limit > 0) presburger::set_dimension_limit(static_cast<std::size_t>(opts.var_limit));
        Session s(opts, in, out);
        if (*decide) return s.decide();
        if (*sat) return s.sat();
        if (*equiv) return s.compare(false);
        if (*subset_cmd) return s.compare(true);
        if (*member) return s.member();
        if (*stats) return s.stats();
        if (*exporter) return s.export_set();
        if (*decompose) return s.cpdbm_decompose();
        if (*demo) return s.demo();
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << "\n";
        return kCapacityError;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace intdec::cli
