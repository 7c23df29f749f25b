#include "tamcy/cli.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <ostream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"

#include "tamcy/binary_tree.hpp"
#include "tamcy/complex.hpp"
#include "tamcy/errors.hpp"
#include "tamcy/interval_poset.hpp"
#include "tamcy/json_io.hpp"
#include "tamcy/noncrossing.hpp"
#include "tamcy/rep.hpp"
#include "tamcy/verify.hpp"

namespace tamcy {

namespace {

using nlohmann::json;

int resolve_element(const FinitePoset& p, const std::string& s) {
    const int by_name = p.index_of(s);
    if (by_name >= 0) return by_name;
    if (!s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
            return std::isdigit(c) != 0;
        })) {
        const int idx = std::stoi(s);
        if (idx >= 0 && idx < p.size()) return idx;
    }
    throw validation_error("no poset element called '" + s + "'");
}

json orbit_json(const IntervalPoset& start, int steps) {
    json arr = json::array();
    IntervalPoset cur = start;
    long cum = 0;
    int period = 0;
    for (int s = 1; s <= steps; ++s) {
        auto [next, shift] = serre_combinatorial(cur);
        cum += shift;
        cur = next;
        arr.push_back({{"ip", ip_json(cur)}, {"shift", shift}, {"cumulative_shift", cum}});
        if (period == 0 && cur == start) period = s;
    }
    return json{{"mode", "combinatorial"},
                {"start", ip_json(start)},
                {"steps", arr},
                {"closed", cur == start},
                {"period", period},
                {"total_shift", cum}};
}

void emit_iteration(std::ostream& out, const SerreIterationReport& r, json j) {
    j["mode"] = "homological";
    j["steps_requested"] = r.steps_requested;
    j["steps_done"] = r.steps_done;
    j["halted"] = r.halted;
    j["total_shift"] = r.total_shift;
    j["step_degrees"] = r.step_degrees;
    j["module_dims"] = r.module.dim_vector();
    json g = json::object();
    for (const auto& [d, m] : r.graded) g[std::to_string(d)] = m.dim_vector();
    j["graded_dims"] = g;
    out << j.dump(2) << "\n";
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"combinatorial and homological checks for Tamari lattices"};
    app.require_subcommand(1);

    auto* cmd_enum = app.add_subcommand("enumerate", "list trees, intervals or interval-posets");
    std::string enum_kind;
    int enum_n = 0;
    bool count_only = false;
    cmd_enum->add_option("--kind", enum_kind, "trees, intervals, ips or nctrees")
        ->required()
        ->check(CLI::IsMember({"trees", "intervals", "ips", "nctrees"}));
    cmd_enum->add_option("--n", enum_n, "number of nodes")->required();
    cmd_enum->add_flag("--count-only", count_only, "print the count without the items");

    auto* cmd_map = app.add_subcommand("map", "apply one of the bijections to a JSON input");
    std::string via, map_input;
    cmd_map->add_option("--via", via, "psi, psi-inv, theta, theta-inv, dual or rotate")
        ->required()
        ->check(CLI::IsMember({"psi", "psi-inv", "theta", "theta-inv", "dual", "rotate"}));
    cmd_map->add_option("--input", map_input, "input JSON file")->required();

    auto* cmd_serre = app.add_subcommand("serre", "iterate the Serre functor");
    std::string serre_input, serre_poset, serre_elem;
    std::string serre_mode = "combinatorial";
    int serre_steps = 0;
    auto* opt_si = cmd_serre->add_option("--input", serre_input, "interval-poset JSON file");
    auto* opt_sp = cmd_serre->add_option("--poset", serre_poset, "poset JSON file");
    cmd_serre->add_option("--proj", serre_elem, "projective to start from (name or index)")
        ->needs(opt_sp);
    cmd_serre->add_option("--steps", serre_steps, "steps to run (default: one full orbit)");
    cmd_serre->add_option("--mode", serre_mode, "combinatorial or homological")
        ->check(CLI::IsMember({"combinatorial", "homological"}));
    opt_si->excludes(opt_sp);

    auto* cmd_verify = app.add_subcommand("verify", "run the verification campaigns");
    std::string check = "all", verify_poset;
    int verify_n = 4;
    long verify_power = 0;
    bool extended = false;
    cmd_verify->add_option("--check", check, "bijections, serre, cy, coxeter, kclass or all")
        ->check(CLI::IsMember({"bijections", "serre", "cy", "coxeter", "kclass", "all"}));
    cmd_verify->add_option("--n", verify_n, "lattice size ('all' clamps each campaign)");
    cmd_verify->add_flag("--extended", extended, "allow the larger serre run");
    cmd_verify->add_option("--poset", verify_poset, "run the coxeter check on a custom poset");
    cmd_verify->add_option("--power", verify_power, "power to test with --poset");

    auto* cmd_export = app.add_subcommand("export", "emit DOT or JSON descriptions");
    std::string what, format = "dot", export_input;
    int export_n = 0;
    cmd_export->add_option("--what", what, "lattice or hasse")
        ->required()
        ->check(CLI::IsMember({"lattice", "hasse"}));
    cmd_export->add_option("--n", export_n, "lattice size (for --what lattice)");
    cmd_export->add_option("--format", format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));
    cmd_export->add_option("--input", export_input, "interval-poset JSON (for --what hasse)");

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("cy-verify");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_enum->parsed()) {
            json items = json::array();
            long count = 0;
            if (enum_kind == "trees") {
                const auto trees = enumerate_trees(enum_n);
                count = long(trees.size());
                if (!count_only)
                    for (const auto& t : trees) items.push_back(tree_json(t));
            } else if (enum_kind == "nctrees") {
                const auto trees = enumerate_nc(enum_n);
                count = long(trees.size());
                if (!count_only)
                    for (const auto& t : trees) items.push_back(nc_json(t));
            } else {
                const auto ips = enumerate_ips(enum_n);
                count = long(ips.size());
                if (!count_only)
                    for (const auto& ip : ips) {
                        if (enum_kind == "ips") {
                            items.push_back(ip_json(ip));
                        } else {
                            const auto [s, t] = ip_to_interval(ip);
                            items.push_back({{"lower", tree_json(s)}, {"upper", tree_json(t)}});
                        }
                    }
            }
            json result{{"kind", enum_kind}, {"n", enum_n}, {"count", count}};
            if (!count_only) result["items"] = std::move(items);
            out << result.dump(2) << "\n";
            return 0;
        }

        if (cmd_map->parsed()) {
            const json in = load_json_file(map_input);
            json result;
            if (via == "psi") result = nc_json(psi(ip_from_json(in)));
            else if (via == "psi-inv") result = ip_json(psi_inv(nc_from_json(in)));
            else if (via == "theta") result = nc_json(theta(ip_from_json(in)));
            else if (via == "theta-inv") result = ip_json(theta_inv(nc_from_json(in)));
            else if (via == "dual") result = nc_json(planar_dual(nc_from_json(in)));
            else result = nc_json(rotate(nc_from_json(in)));
            out << result.dump(2) << "\n";
            return 0;
        }

        if (cmd_serre->parsed()) {
            if (!serre_poset.empty()) {
                if (serre_elem.empty())
                    throw validation_error("--poset needs --proj to pick a starting module");
                const PosetPtr p =
                    std::make_shared<const FinitePoset>(poset_from_json(load_json_file(serre_poset)));
                const int x = resolve_element(*p, serre_elem);
                const int k = serre_steps > 0 ? serre_steps : 1;
                emit_iteration(out, serre_iterate(proj(p, x), k), json{{"element", p->name(x)}});
                return 0;
            }
            if (serre_input.empty())
                throw validation_error("serre needs either --input or --poset");
            const IntervalPoset ip = ip_from_json(load_json_file(serre_input));
            const int k = serre_steps > 0 ? serre_steps : 2 * ip.n() + 2;
            if (serre_mode == "combinatorial") {
                out << orbit_json(ip, k).dump(2) << "\n";
                return 0;
            }
            const TamariLattice lat = tamari_lattice(ip.n());
            emit_iteration(out, serre_iterate(interval_module(lat, ip), k),
                           json{{"start", ip_json(ip)}});
            return 0;
        }

        if (cmd_verify->parsed()) {
            if (!verify_poset.empty()) {
                if (check != "coxeter" && check != "all")
                    throw validation_error("a custom poset only supports the coxeter check");
                if (verify_power < 1)
                    throw validation_error("--poset needs a positive --power");
                const PosetPtr p =
                    std::make_shared<const FinitePoset>(poset_from_json(load_json_file(verify_poset)));
                const auto rep = verify_coxeter_generic(*p, verify_power);
                out << rep.json().dump(2) << "\n";
                return rep.passed() ? 0 : 1;
            }
            auto run_one = [&](const std::string& c, int m) {
                if (c == "bijections") return verify_bijections(m);
                if (c == "serre") return verify_serre(m, extended);
                if (c == "cy") return verify_cy(m);
                if (c == "coxeter") return verify_coxeter(m);
                return verify_kclass(m);
            };
            if (check != "all") {
                const auto rep = run_one(check, verify_n);
                out << rep.json().dump(2) << "\n";
                return rep.passed() ? 0 : 1;
            }
            const std::pair<const char*, int> caps[] = {{"bijections", 5},
                                                        {"serre", extended ? 5 : 4},
                                                        {"cy", 6},
                                                        {"coxeter", 8},
                                                        {"kclass", 5}};
            json reports = json::array();
            bool ok = true;
            for (const auto& [c, cap] : caps) {
                const auto rep = run_one(c, std::min(verify_n, cap));
                ok = ok && rep.passed();
                reports.push_back(rep.json());
            }
            out << json{{"checks", std::move(reports)}, {"passed", ok}}.dump(2) << "\n";
            return ok ? 0 : 1;
        }

        if (cmd_export->parsed()) {
            if (what == "lattice") {
                if (export_n < 1)
                    throw validation_error("--n is required for the lattice export");
                const TamariLattice lat = tamari_lattice(export_n);
                if (format == "dot") out << poset_dot(*lat.poset);
                else out << poset_json(*lat.poset).dump(2) << "\n";
                return 0;
            }
            if (export_input.empty())
                throw validation_error("--input is required for the hasse export");
            const IntervalPoset ip = ip_from_json(load_json_file(export_input));
            if (format == "dot") {
                out << ip_dot(ip);
            } else {
                const HasseSplit h = hasse_split(ip);
                json inc = json::array(), dec = json::array();
                for (const auto& [a, b] : h.increasing) inc.push_back(json{a, b});
                for (const auto& [a, b] : h.decreasing) dec.push_back(json{a, b});
                out << json{{"n", ip.n()}, {"increasing", inc}, {"decreasing", dec}}.dump(2)
                    << "\n";
            }
            return 0;
        }
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace tamcy
