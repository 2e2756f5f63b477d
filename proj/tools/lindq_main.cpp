// lindq: construct H_k^q, compute scalar linear indices, decide
// homomorphisms, evaluate lower bounds and run verification suites.
//
// Exit codes: 0 success/true, 1 false/failed check, 2 usage or input error,
// 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lindq/bounds.hpp"
#include "lindq/errors.hpp"
#include "lindq/graph_io.hpp"
#include "lindq/hkq.hpp"
#include "lindq/hom.hpp"
#include "lindq/lind.hpp"
#include "lindq/report.hpp"
#include "lindq/verify.hpp"

using namespace lindq;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_false = 1;
constexpr int exit_usage = 2;
constexpr int exit_cap = 3;

Caps apply_cap_flags(Caps caps, const std::vector<std::string>& flags)
{
    for (const auto& flag : flags) {
        const auto eq = flag.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--cap", "expected name=value, got " + flag);
        const std::string name = flag.substr(0, eq);
        const long long value = std::stoll(flag.substr(eq + 1));
        if (value <= 0)
            throw CLI::ValidationError("--cap", "caps must be positive");
        if (name == "clique")
            caps.clique_max_n = static_cast<int>(value);
        else if (name == "subset")
            caps.subset_max_n = static_cast<int>(value);
        else if (name == "core")
            caps.core_max_n = static_cast<int>(value);
        else if (name == "iso")
            caps.iso_max_n = static_cast<int>(value);
        else if (name == "hom_source")
            caps.hom_max_source = static_cast<int>(value);
        else if (name == "hom_target")
            caps.hom_max_target = static_cast<int>(value);
        else if (name == "hkq")
            caps.hkq_max_vertices = value;
        else if (name == "minrank")
            caps.minrank_max_m = static_cast<int>(value);
        else
            throw CLI::ValidationError("--cap", "unknown cap " + name);
    }
    return caps;
}

void emit(const json& j) { std::cout << j.dump(2) << std::endl; }

json hom_witness_json(const HomWitness& w) { return {{"map", w.map}}; }

int cmd_construct(int q, int k, const std::string& out, const Caps& caps)
{
    const auto f = gf::make_field(q, caps);
    const HkqGraph h = construct_hkq(f, k, caps);
    if (out.empty()) {
        write_graph(std::cout, h.graph());
        return exit_ok;
    }
    {
        std::ofstream g(out);
        if (!g)
            throw Error("cannot write " + out);
        write_graph(g, h.graph());
    }
    {
        std::ofstream l(out + ".labels");
        if (!l)
            throw Error("cannot write " + out + ".labels");
        write_hkq_labels(l, h);
    }
    emit({{"q", q},
          {"k", k},
          {"n", h.size()},
          {"arcs", h.graph().arc_count()},
          {"degree", hkq_degree(q, k)},
          {"graph", out},
          {"labels", out + ".labels"}});
    return exit_ok;
}

int cmd_lind(int q, const std::string& method, const std::string& path, const Caps& caps)
{
    const auto f = gf::make_field(q, caps);
    const Digraph g = read_graph_file(path);
    json out = {{"q", q}, {"n", g.size()}, {"method", method}};
    json witness = json::object();
    std::optional<int> by_matrix;
    std::optional<int> by_hom;

    if (method == "matrix" || method == "both") {
        const auto r = minrank(f, g, caps);
        by_matrix = r.rank;
        witness["fitting_matrix"] = to_json(r.fitting);
    }
    if (method == "hom" || method == "both") {
        HkqFamily family(f, caps);
        const auto r = lind_via_hom(g, family);
        by_hom = r.lind;
        json hw = hom_witness_json(r.witness);
        if (r.lind > 0) {
            const HkqGraph& h = family.graph(r.lind);
            json labels = json::array();
            for (int x : r.witness.map)
                labels.push_back(h.label_string(x));
            hw["labels"] = labels;
            hw["code"] = to_json(code_from_hom_witness(g, h, r.witness));
        }
        witness["homomorphism"] = hw;
    }
    out["witness"] = witness;
    if (method == "both") {
        out["lind"] = *by_matrix;
        out["agree"] = *by_matrix == *by_hom;
        out["lind_matrix"] = *by_matrix;
        out["lind_hom"] = *by_hom;
        emit(out);
        if (*by_matrix != *by_hom) {
            std::cerr << "routes disagree: matrix " << *by_matrix << ", hom " << *by_hom << '\n';
            return exit_false;
        }
        return exit_ok;
    }
    out["lind"] = by_matrix ? *by_matrix : *by_hom;
    emit(out);
    return exit_ok;
}

int cmd_hom(const std::string& g_path, const std::string& h_path, bool use_complement,
            const std::string& witness_path, const Caps& caps)
{
    Digraph g = read_graph_file(g_path);
    Digraph h = read_graph_file(h_path);
    if (use_complement) {
        g = complement(g);
        h = complement(h);
    }
    const auto w = hom_exists(g, h, {}, caps);
    json out = {{"exists", w.has_value()}, {"complement", use_complement}};
    if (w)
        out["witness"] = hom_witness_json(*w);
    emit(out);
    if (w && !witness_path.empty()) {
        std::ofstream f(witness_path);
        if (!f)
            throw Error("cannot write " + witness_path);
        f << hom_witness_json(*w).dump(2) << '\n';
    }
    return w ? exit_ok : exit_false;
}

int cmd_bounds(int q, const std::vector<int>& ls, bool exact, const std::string& path, const Caps& caps)
{
    const auto f = gf::make_field(q, caps);
    const Digraph g = read_graph_file(path);
    const auto rep = bound_report(g, f, ls, exact, caps, path);
    for (const auto& b : rep.bounds)
        std::cerr << b.name << ": " << (b.value ? std::to_string(*b.value) : "n/a") << '\n';
    emit(to_json(rep));
    return rep.consistent.value_or(true) ? exit_ok : exit_false;
}

int cmd_props(const std::string& path, const Caps& caps)
{
    const Digraph g = read_graph_file(path);
    json out = {{"n", g.size()}, {"arcs", g.arc_count()}};
    json errors = json::object();
    auto attempt = [&](const char* name, auto&& compute) {
        try {
            out[name] = compute();
        } catch (const SizeLimitExceeded& e) {
            out[name] = nullptr;
            errors[name] = e.what();
        }
    };
    attempt("chi_complement", [&] { return chromatic_number(complement(g), caps).chromatic_number; });
    attempt("omega", [&] { return clique_number(g, caps); });
    attempt("alpha", [&] { return independence_number(g, caps); });
    attempt("core_size", [&] { return static_cast<int>(core_vertices(g, caps).size()); });
    if (!errors.empty())
        out["errors"] = errors;
    emit(out);
    return exit_ok;
}

int cmd_verify(const VerifyRequest& req, const Caps& caps)
{
    const json out = run_verification(req, caps);
    emit(out);
    const bool passed = out.value("passed", false);
    std::cerr << "verify " << req.suite << ": " << (passed ? "pass" : "FAIL") << '\n';
    return passed ? exit_ok : exit_false;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Scalar linear index coding over finite fields via H_k^q homomorphisms"};
    app.require_subcommand(1);
    std::vector<std::string> cap_flags;
    app.fallthrough();
    app.add_option("--cap", cap_flags, "Override a size cap, e.g. --cap hkq=20000 (repeatable)")
        ->allow_extra_args(false);

    int q = 2;
    int k = 2;
    std::string out_path;
    auto* construct = app.add_subcommand("construct", "Write H_k^q and its label sidecar");
    construct->add_option("--q", q, "Field size")->required();
    construct->add_option("--k", k, "Dimension")->required();
    construct->add_option("--out", out_path, "Graph output path; labels go to <out>.labels");

    std::string method = "matrix";
    std::string graph_path;
    auto* lind = app.add_subcommand("lind", "Scalar linear index of a side information digraph");
    lind->add_option("--q", q, "Field size")->required();
    lind->add_option("--method", method, "matrix | hom | both")
        ->check(CLI::IsMember({"matrix", "hom", "both"}));
    lind->add_option("graph", graph_path, "Graph file")->required();

    std::string g_path;
    std::string h_path;
    bool use_complement = false;
    std::string witness_path;
    auto* hom = app.add_subcommand("hom", "Decide whether G -> H");
    hom->add_option("G", g_path, "Source graph file")->required();
    hom->add_option("H", h_path, "Target graph file")->required();
    hom->add_flag("--complement", use_complement, "Decide complement(G) -> complement(H), i.e. G ⪯ H");
    hom->add_option("--witness", witness_path, "Write the witness map as JSON");

    std::vector<int> ls;
    bool exact = false;
    auto* bounds = app.add_subcommand("bounds", "Evaluate lower bounds on lind_q");
    bounds->add_option("--q", q, "Field size")->required();
    bounds->add_option("--l", ls, "Colour counts for the l-colourable bound, e.g. 2,3")->delimiter(',');
    bounds->add_flag("--exact", exact, "Also compute lind_q and check consistency");
    bounds->add_option("graph", graph_path, "Graph file")->required();

    auto* props = app.add_subcommand("props", "Exact graph parameters");
    props->add_option("graph", graph_path, "Graph file")->required();

    VerifyRequest req;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", req.suite, "Suite name")
        ->required()
        ->check(CLI::IsMember(verification_suites()));
    verify->add_option("--q", req.q, "Field size");
    verify->add_option("--k", req.k, "Dimension");
    verify->add_option("--n", req.n, "Vertex count for the icd suite");
    verify->add_option("--l", req.l, "Colour count for the lcolor suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        const Caps caps = apply_cap_flags(caps_from_env(), cap_flags);
        if (*construct)
            return cmd_construct(q, k, out_path, caps);
        if (*lind)
            return cmd_lind(q, method, graph_path, caps);
        if (*hom)
            return cmd_hom(g_path, h_path, use_complement, witness_path, caps);
        if (*bounds)
            return cmd_bounds(q, ls, exact, graph_path, caps);
        if (*props)
            return cmd_props(graph_path, caps);
        if (*verify)
            return cmd_verify(req, caps);
    } catch (const SizeLimitExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_cap;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
