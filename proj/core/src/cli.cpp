#include "boardmagic/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "boardmagic/construct.hpp"
#include "boardmagic/document.hpp"
#include "boardmagic/feasibility.hpp"
#include "boardmagic/oracle.hpp"

namespace boardmagic::cli {

namespace {

std::string board_str(const Board& b) {
    std::ostringstream os;
    os << "(" << b.p << ", " << b.q << ", " << b.r << ")";
    return os.str();
}

std::string constants_str(const Classification& c) {
    if (!c.constants) return "-";
    std::ostringstream os;
    os << "c1=" << (*c.constants)[0] << " c2=" << (*c.constants)[1] << " c3=" << (*c.constants)[2];
    return os.str();
}

MagicClass parse_class(const std::string& s) {
    auto cls = magic_class_from_string(s);
    if (!cls) throw CLI::ValidationError("class must be one of: tri, bi, magic");
    return *cls;
}

bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
    std::ofstream f(path);
    if (!f) {
        err << "error: cannot open '" << path << "' for writing\n";
        return false;
    }
    f << text;
    return true;
}

int cmd_construct(const std::string& cls_name, int p, int q, int r, const std::string& out_path,
                  std::ostream& out, std::ostream& err) {
    MagicClass cls = parse_class(cls_name);
    Board b{p, q, r};
    try {
        Design d = construct(cls, b);
        Classification c = classify(d);
        out << to_string(c.kind) << " design for board " << board_str(b) << "\n";
        if (c.kind == DesignKind::Magic)
            out << "m = " << (*c.constants)[0] << "\n";
        else
            out << "constants: " << constants_str(c) << "\n";
        if (!out_path.empty()) {
            if (!write_file(out_path, to_document(d), err)) return kUsage;
            out << "wrote " << out_path << "\n";
        }
        return kOk;
    } catch (const ConstructError& e) {
        if (e.kind == ConstructError::Kind::proven_impossible) {
            err << "impossible: " << e.statement << " [rule: " << e.rule << "]\n";
            return kImpossible;
        }
        err << "not covered: " << e.statement << " [" << e.rule << "]\n";
        return kNotCovered;
    }
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
    std::ifstream f(path);
    if (!f) {
        err << "error: cannot read '" << path << "'\n";
        return kUsage;
    }
    std::stringstream buf;
    buf << f.rdbuf();
    Design d;
    try {
        d = from_document(buf.str());
    } catch (const DocumentParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidDesign& e) {
        err << "invalid design: " << e.what() << "\n";
        return kInvalidDesign;
    }
    SumProfile prof = sum_profile(d);
    out << "board: " << board_str(d.board) << "\n";
    auto print_vec = [&](const char* name, const std::vector<std::int64_t>& v) {
        out << name << " sums:";
        for (auto s : v) out << " " << s;
        out << "\n";
    };
    print_vec("x", prof.x);
    print_vec("y", prof.y);
    print_vec("z", prof.z);
    Classification c = classify(d);
    out << "classification: " << to_string(c.kind) << "\n";
    if (c.constants) {
        out << "constants: " << constants_str(c) << "\n";
        out << "pythagorean: " << (is_pythagorean(*c.constants) ? "yes" : "no") << "\n";
    }
    return c.kind == DesignKind::NotConstant ? kInvalidDesign : kOk;
}

int cmd_search(const std::string& cls_name, int p, int q, int r, const SearchBudget& budget,
               int workers, const std::string& out_path, std::ostream& out, std::ostream& err) {
    MagicClass cls = parse_class(cls_name);
    SearchOptions options;
    options.workers = workers;
    try {
        SearchOutcome res = search(Board{p, q, r}, cls, budget, options);
        switch (res.verdict) {
            case SearchVerdict::Found: {
                Classification c = classify(*res.witness);
                out << "found " << to_string(c.kind) << " design (nodes=" << res.nodes_explored
                    << ", " << res.elapsed.count() << " ms)\n";
                out << "constants: " << constants_str(c) << "\n";
                if (!out_path.empty()) {
                    if (!write_file(out_path, to_document(*res.witness), err)) return kUsage;
                    out << "wrote " << out_path << "\n";
                }
                return kOk;
            }
            case SearchVerdict::ProvenNonexistent:
                out << "proven nonexistent (nodes=" << res.nodes_explored << ", "
                    << res.elapsed.count() << " ms)\n";
                return kImpossible;
            case SearchVerdict::BudgetExceeded:
                out << "budget exceeded (nodes=" << res.nodes_explored << ", "
                    << res.elapsed.count() << " ms)\n";
                return kBudgetExceeded;
        }
        return kUsage;
    } catch (const BoardTooLarge& e) {
        err << "board too large: " << e.what() << "\n";
        err << "raise the cap with --max-squares (tested up to 16)\n";
        return kBoardTooLarge;
    }
}

int cmd_feasible(const std::string& cls_name, int p, int q, int r, std::ostream& out) {
    Board b{p, q, r};
    std::vector<MagicClass> classes;
    if (cls_name == "all")
        classes = {MagicClass::Tri, MagicClass::Bi, MagicClass::Magic};
    else
        classes = {parse_class(cls_name)};
    for (MagicClass cls : classes) {
        KnownStatus st = known_status(b, cls);
        out << board_str(b) << " " << to_string(cls) << ": " << to_string(st.verdict);
        if (!st.rule.empty()) out << " [" << st.rule << "]";
        out << " " << st.statement << "\n";
        if (cls == MagicClass::Magic) {
            if (auto m = magic_constant(b))
                out << "  magic constant would be m = " << *m << "\n";
            else
                out << "  no integral magic constant exists\n";
        }
    }
    return kOk;
}

int cmd_sweep(const std::string& cls_name, int max_dim, const std::string& out_path, bool machine,
              std::ostream& out, std::ostream& err) {
    MagicClass cls = parse_class(cls_name);
    std::ostringstream report;
    std::vector<std::string> failures;
    if (machine) report << "p,q,r,class,status,c1,c2,c3,rule\n";
    for (int p = 1; p <= max_dim; ++p)
        for (int q = p; q <= max_dim; ++q)
            for (int r = q; r <= max_dim; ++r) {
                Board b{p, q, r};
                KnownStatus st = known_status(b, cls);
                std::string status, constants = "-", rule = st.rule;
                std::array<std::int64_t, 3> c{};
                bool have_constants = false;
                switch (st.verdict) {
                    case Verdict::ProvenYes: {
                        try {
                            Design d = construct(cls, b);
                            Classification cf = classify(d);
                            if (!validate(d).empty() || !cf.is(cls)) throw std::logic_error("bad");
                            c = *cf.constants;
                            have_constants = true;
                            status = "ok";
                        } catch (const std::exception& e) {
                            status = "FAIL";
                            failures.push_back(board_str(b) + ": " + e.what());
                        }
                        break;
                    }
                    case Verdict::ProvenNo: status = "proven-no"; break;
                    case Verdict::Open:
                        status = "open";
                        rule = "-";
                        break;
                }
                if (have_constants) {
                    std::ostringstream cs;
                    cs << c[0] << "/" << c[1] << "/" << c[2];
                    constants = cs.str();
                }
                if (machine) {
                    report << p << "," << q << "," << r << "," << to_string(cls) << "," << status
                           << ",";
                    if (have_constants)
                        report << c[0] << "," << c[1] << "," << c[2];
                    else
                        report << ",,";
                    report << "," << rule << "\n";
                } else {
                    std::ostringstream row;
                    row << std::left << std::setw(14) << board_str(b) << std::setw(11) << status
                        << std::setw(20) << constants << rule;
                    report << row.str() << "\n";
                }
            }
    if (!out_path.empty()) {
        if (!write_file(out_path, report.str(), err)) return kUsage;
        out << "wrote " << out_path << "\n";
    } else {
        out << report.str();
    }
    if (!failures.empty()) {
        err << failures.size() << " construction(s) failed verification:\n";
        for (const auto& f : failures) err << "  " << f << "\n";
        return kSweepMismatch;
    }
    return kOk;
}

int cmd_fixture(const std::string& name, bool list, const std::string& out_path,
                std::ostream& out, std::ostream& err) {
    if (list) {
        for (const auto& n : fixture_names()) out << n << "\n";
        return kOk;
    }
    Design d;
    try {
        d = fixture(name);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        err << "use --list to see available fixtures\n";
        return kUsage;
    }
    Classification c = classify(d);
    out << name << ": " << to_string(c.kind) << " design for board " << board_str(d.board)
        << "\n";
    out << "constants: " << constants_str(c) << "\n";
    if (!out_path.empty()) {
        if (!write_file(out_path, to_document(d), err)) return kUsage;
        out << "wrote " << out_path << "\n";
    } else {
        out << to_document(d);
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"construct, verify and search magic labelings of (p,q,r)-boards"};
    app.require_subcommand(1);

    std::string cls, path, out_path;
    int p = 1, q = 1, r = 1, max_dim = 1;
    bool machine = false, list = false;
    std::string fixture_name;
    SearchBudget budget;
    int workers = 1;
    std::int64_t time_limit_ms = budget.time_limit.count();

    auto* construct_cmd = app.add_subcommand("construct", "build a design of the given class");
    construct_cmd->add_option("class", cls, "tri | bi | magic")->required();
    construct_cmd->add_option("p", p)->required();
    construct_cmd->add_option("q", q)->required();
    construct_cmd->add_option("r", r)->required();
    construct_cmd->add_option("--out", out_path, "write the design document here");

    auto* verify_cmd = app.add_subcommand("verify", "check a design document");
    verify_cmd->add_option("file", path, "design document")->required();

    auto* search_cmd = app.add_subcommand("search", "exhaustive existence search");
    search_cmd->add_option("class", cls, "tri | bi | magic")->required();
    search_cmd->add_option("p", p)->required();
    search_cmd->add_option("q", q)->required();
    search_cmd->add_option("r", r)->required();
    search_cmd->add_option("--out", out_path, "write a found witness here");
    search_cmd->add_option("--max-squares", budget.max_squares,
                           "square cap (default 12, tested up to 16)");
    search_cmd->add_option("--max-nodes", budget.max_nodes, "node budget");
    search_cmd->add_option("--time-limit", time_limit_ms, "time budget in milliseconds");
    search_cmd->add_option("--workers", workers, "parallel workers (default 1)");

    auto* feasible_cmd = app.add_subcommand("feasible", "what the result catalog says");
    feasible_cmd->add_option("class", cls, "tri | bi | magic | all")->required();
    feasible_cmd->add_option("p", p)->required();
    feasible_cmd->add_option("q", q)->required();
    feasible_cmd->add_option("r", r)->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "status table over all boards up to a size");
    sweep_cmd->add_option("class", cls, "tri | bi | magic")->required();
    sweep_cmd->add_option("max_dim", max_dim, "largest side length")->required();
    sweep_cmd->add_option("--out", out_path, "write the table here");
    sweep_cmd->add_flag("--machine", machine, "CSV output");

    auto* fixture_cmd = app.add_subcommand("fixture", "print a stored design");
    fixture_cmd->add_option("name", fixture_name, "fixture name");
    fixture_cmd->add_flag("--list", list, "list fixture names");

    std::vector<const char*> argv;
    argv.push_back("boardmagic");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (app.got_subcommand(construct_cmd)) return cmd_construct(cls, p, q, r, out_path, out, err);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(path, out, err);
        if (app.got_subcommand(search_cmd)) {
            if (budget.max_squares > 16) {
                err << "error: --max-squares above 16 is not supported\n";
                return kUsage;
            }
            if (budget.max_squares > 12)
                err << "warning: square cap " << budget.max_squares
                    << " is above the default of 12; searches may be slow\n";
            budget.time_limit = std::chrono::milliseconds(time_limit_ms);
            return cmd_search(cls, p, q, r, budget, workers, out_path, out, err);
        }
        if (app.got_subcommand(feasible_cmd)) return cmd_feasible(cls, p, q, r, out);
        if (app.got_subcommand(sweep_cmd)) return cmd_sweep(cls, max_dim, out_path, machine, out, err);
        if (app.got_subcommand(fixture_cmd)) {
            if (!list && fixture_name.empty()) {
                err << "error: give a fixture name or --list\n";
                return kUsage;
            }
            return cmd_fixture(fixture_name, list, out_path, out, err);
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace boardmagic::cli
