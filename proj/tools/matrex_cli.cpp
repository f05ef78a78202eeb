// Command-line front end for the matrex shared library. All verdict logic
// lives behind the C API; this file only parses arguments, moves file
// contents in and prints results out.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict,
// 2 usage, parse or semantic error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <matrex.h>

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;

[[noreturn]] void die(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(kExitUsage);
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) die("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void check_status(mx_status st) {
    if (st != MX_OK) die(mx_last_error());
}

struct FamilyHandle {
    mx_family* p = nullptr;
    ~FamilyHandle() { mx_family_free(p); }
};
struct StringHandle {
    char* p = nullptr;
    ~StringHandle() { mx_string_free(p); }
};

mx_family* load_family(const std::string& path) {
    mx_family* f = nullptr;
    check_status(mx_family_parse(read_input(path).c_str(), &f));
    return f;
}

mx_alpha* load_alpha(const std::string& spec) {
    mx_alpha* a = nullptr;
    std::ifstream probe(spec);
    if (spec == "-" || probe.good())
        check_status(mx_alpha_parse(read_input(spec).c_str(), &a));
    else
        check_status(mx_alpha_from_csv(spec.c_str(), &a));
    return a;
}

int print_yes_no(int verdict) {
    std::cout << (verdict ? "yes" : "no") << "\n";
    return verdict ? kExitYes : kExitNo;
}

int emit_family(mx_family* f) {
    FamilyHandle fh{f};
    StringHandle text;
    check_status(mx_family_serialize(f, &text.p));
    std::cout << text.p;
    return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matroid toolkit: expansion/contraction functors and a bounded "
                 "symmetric-exchange test bench"};
    app.require_subcommand(1);

    std::string file, file_b, keep, alpha_spec, element, format = "human";
    int te_class = 1, te_m = 2, m_max = 2;
    std::uint64_t budget = 0;
    int uniform_t = 0, uniform_n = 1, rank_t = 1;

    auto* cmd_check = app.add_subcommand("check", "is the family a matroid? prints rank when yes");
    cmd_check->add_option("file", file)->required();

    auto* cmd_circuits = app.add_subcommand("circuits", "print all circuits, one per line");
    cmd_circuits->add_option("file", file)->required();

    auto* cmd_rank = app.add_subcommand("rank", "print the common basis cardinality");
    cmd_rank->add_option("file", file)->required();

    auto* cmd_restrict = app.add_subcommand("restrict", "restrict to the kept elements");
    cmd_restrict->add_option("file", file)->required();
    cmd_restrict->add_option("--keep", keep, "elements to keep, e.g. \"x1 x2\"")->required();

    auto* cmd_expand = app.add_subcommand("expand", "expand by a multiplicity vector");
    cmd_expand->add_option("file", file)->required();
    cmd_expand->add_option("--alpha", alpha_spec, "alpha file or inline list \"2,1,1\"")->required();

    auto* cmd_contract = app.add_subcommand("contract", "emit the contracted family");
    cmd_contract->add_option("file", file)->required();

    auto* cmd_iscontracted = app.add_subcommand("iscontracted", "is every ~ class a singleton?");
    cmd_iscontracted->add_option("file", file)->required();

    auto* cmd_binary = app.add_subcommand("binary", "circuit criterion for binary matroids");
    cmd_binary->add_option("file", file)->required();

    auto* cmd_iso = app.add_subcommand("isomorphic", "search for a basis-preserving relabeling");
    cmd_iso->add_option("a", file)->required();
    cmd_iso->add_option("b", file_b)->required();

    auto* cmd_construct = app.add_subcommand("construct", "build a matroid of a named class");
    cmd_construct->require_subcommand(1);
    auto* cc_uniform = cmd_construct->add_subcommand("uniform", "U_{t,n} on x1..xn");
    cc_uniform->add_option("t", uniform_t)->required();
    cc_uniform->add_option("n", uniform_n)->required();
    auto* cc_partition = cmd_construct->add_subcommand("partition", "partition matroid of rank t");
    cc_partition->add_option("system-file", file)->required();
    cc_partition->add_option("t", rank_t)->required();
    auto* cc_graphic = cmd_construct->add_subcommand("graphic", "spanning-tree matroid");
    cc_graphic->add_option("graph-file", file)->required();
    auto* cc_transversal = cmd_construct->add_subcommand("transversal", "matroid of a set system");
    cc_transversal->add_option("system-file", file)->required();

    auto* cmd_te = app.add_subcommand("te", "bounded TE connectivity check");
    cmd_te->add_option("file", file)->required();
    cmd_te->add_option("--class", te_class, "exchange class 1, 2 or 3")->required();
    cmd_te->add_option("--m", te_m, "sequence length")->required();
    cmd_te->add_option("--budget", budget, "max BFS nodes (default 10^6)");

    auto* cmd_white = app.add_subcommand("white", "contract, then TE-check the contraction");
    cmd_white->add_option("file", file)->required();
    cmd_white->add_option("--mmax", m_max, "check sequence lengths 2..mmax")->required();
    cmd_white->add_option("--budget", budget, "max BFS nodes (default 10^6)");
    cmd_white->add_option("--format", format, "human (default) or kv")
        ->check(CLI::IsMember({"human", "kv"}));

    auto* cmd_sum = app.add_subcommand("sum", "direct sum of two matroids");
    cmd_sum->add_option("a", file)->required();
    cmd_sum->add_option("b", file_b)->required();

    auto* cmd_coloop = app.add_subcommand("coloop", "add an element to every basis");
    cmd_coloop->add_option("file", file)->required();
    cmd_coloop->add_option("elem", element)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (cmd_check->parsed()) {
        FamilyHandle f{load_family(file)};
        int verdict = 0;
        check_status(mx_family_is_matroid(f.p, &verdict));
        if (!verdict) {
            std::cout << "no\n";
            return kExitNo;
        }
        int rank = 0;
        check_status(mx_family_rank(f.p, &rank));
        std::cout << "yes\nrank " << rank << "\n";
        return kExitYes;
    }
    if (cmd_circuits->parsed()) {
        FamilyHandle f{load_family(file)};
        StringHandle text;
        check_status(mx_family_circuits(f.p, &text.p));
        std::cout << text.p;
        return kExitYes;
    }
    if (cmd_rank->parsed()) {
        FamilyHandle f{load_family(file)};
        int rank = 0;
        check_status(mx_family_rank(f.p, &rank));
        std::cout << rank << "\n";
        return kExitYes;
    }
    if (cmd_restrict->parsed()) {
        FamilyHandle f{load_family(file)};
        mx_family* out = nullptr;
        check_status(mx_family_restrict(f.p, keep.c_str(), &out));
        return emit_family(out);
    }
    if (cmd_expand->parsed()) {
        FamilyHandle f{load_family(file)};
        mx_alpha* a = load_alpha(alpha_spec);
        mx_family* out = nullptr;
        mx_status st = mx_family_expand(f.p, a, &out);
        mx_alpha_free(a);
        check_status(st);
        return emit_family(out);
    }
    if (cmd_contract->parsed()) {
        FamilyHandle f{load_family(file)};
        mx_family* out = nullptr;
        check_status(mx_family_contract(f.p, &out));
        return emit_family(out);
    }
    if (cmd_iscontracted->parsed()) {
        FamilyHandle f{load_family(file)};
        int verdict = 0;
        check_status(mx_family_is_contracted(f.p, &verdict));
        return print_yes_no(verdict);
    }
    if (cmd_binary->parsed()) {
        FamilyHandle f{load_family(file)};
        int verdict = 0;
        check_status(mx_family_is_binary(f.p, &verdict));
        return print_yes_no(verdict);
    }
    if (cmd_iso->parsed()) {
        FamilyHandle a{load_family(file)};
        FamilyHandle b{load_family(file_b)};
        int found = 0;
        StringHandle map;
        check_status(mx_family_isomorphism(a.p, b.p, &found, &map.p));
        std::cout << (found ? "yes" : "no") << "\n";
        if (found) std::cout << map.p;
        return found ? kExitYes : kExitNo;
    }
    if (cc_uniform->parsed()) {
        mx_family* out = nullptr;
        check_status(mx_uniform(uniform_t, uniform_n, &out));
        return emit_family(out);
    }
    if (cc_partition->parsed()) {
        mx_system* sys = nullptr;
        check_status(mx_system_parse(read_input(file).c_str(), &sys));
        mx_family* out = nullptr;
        mx_status st = mx_partition(sys, rank_t, &out);
        mx_system_free(sys);
        check_status(st);
        return emit_family(out);
    }
    if (cc_graphic->parsed()) {
        mx_graph* g = nullptr;
        check_status(mx_graph_parse(read_input(file).c_str(), &g));
        mx_family* out = nullptr;
        mx_status st = mx_graphic(g, &out);
        mx_graph_free(g);
        check_status(st);
        return emit_family(out);
    }
    if (cc_transversal->parsed()) {
        mx_system* sys = nullptr;
        check_status(mx_system_parse(read_input(file).c_str(), &sys));
        mx_family* out = nullptr;
        mx_status st = mx_transversal(sys, &out);
        mx_system_free(sys);
        check_status(st);
        return emit_family(out);
    }
    if (cmd_te->parsed()) {
        FamilyHandle f{load_family(file)};
        int verdict = 0;
        StringHandle text;
        check_status(mx_te_check(f.p, te_class, te_m, budget, &verdict, &text.p));
        std::cout << text.p;
        return verdict == 1 ? kExitNo : kExitYes;
    }
    if (cmd_white->parsed()) {
        FamilyHandle f{load_family(file)};
        int all_hold = 0;
        StringHandle text;
        check_status(mx_white_report(f.p, m_max, budget, format == "kv" ? 1 : 0,
                                     &all_hold, &text.p));
        std::cout << text.p;
        return all_hold ? kExitYes : kExitNo;
    }
    if (cmd_sum->parsed()) {
        FamilyHandle a{load_family(file)};
        FamilyHandle b{load_family(file_b)};
        mx_family* out = nullptr;
        check_status(mx_family_direct_sum(a.p, b.p, &out));
        return emit_family(out);
    }
    if (cmd_coloop->parsed()) {
        FamilyHandle f{load_family(file)};
        mx_family* out = nullptr;
        check_status(mx_family_add_coloop(f.p, element.c_str(), &out));
        return emit_family(out);
    }
    return kExitUsage;
}
