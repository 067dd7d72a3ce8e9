#include "report.hpp"

#include "hk/lattice.hpp"
#include "hk/pell.hpp"
#include "hk/rrinv.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>

using namespace hk;
using report::json;

namespace {

struct Output {
    json params = json::object();
    json result;
    std::vector<std::string> provenance;
    std::optional<report::Table> table;
};

json solution_json(const std::optional<pell::Solution>& s) {
    if (!s) return nullptr;
    return {{"a", report::big(s->a)}, {"b", report::big(s->b)}};
}

json cone_json(const cones::ConeReport& r) {
    json walls = json::array();
    for (const auto& w : r.walls) walls.push_back(to_string(w));
    return {{"mov", r.mov_slope.str()},
            {"nef", r.nef_slope.str()},
            {"walls", walls},
            {"infinitely_many", r.infinitely_many},
            {"nef_equals_mov", r.nef_equals_mov}};
}

json groups_json(const autgroups::AutBir& g) {
    json j = {{"aut", report::group_name(g.aut)}, {"bir", report::group_name(g.bir)}};
    if (g.bir.kind == autgroups::GroupTag::Kind::Unknown) j["note"] = g.bir.reason;
    return j;
}

rrinv::Series parse_series(const std::string& s) {
    if (s == "hilbk3") return rrinv::Series::HilbK3;
    if (s == "kummer") return rrinv::Series::Kummer;
    throw Error("InvalidArgument", "unknown series '" + s + "'");
}

json table_json(const report::Table& t) {
    // one object per column, keyed by the row labels
    json out = json::array();
    const auto& rows = t.rows;
    if (rows.empty()) return out;
    for (std::size_t c = 1; c < rows[0].size(); ++c) {
        json col = json::object();
        for (const auto& r : rows) col[r[0]] = r[c];
        out.push_back(col);
    }
    return out;
}

json records_json(const report::Table& t) {
    // one object per row, keyed by the header
    json out = json::array();
    for (std::size_t r = 1; r < t.rows.size(); ++r) {
        json row = json::object();
        for (std::size_t c = 0; c < t.rows[0].size(); ++c) row[t.rows[0][c]] = t.rows[r][c];
        out.push_back(row);
    }
    return out;
}

std::string flat(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void emit(const std::string& command, const std::string& format, const Output& out) {
    if (format == "json") {
        json env = {{"command", command}, {"params", out.params}, {"provenance", out.provenance}, {"result", out.result}};
        std::cout << env.dump() << "\n";
        return;
    }
    if (out.table) {
        std::cout << (format == "csv" ? out.table->csv() : out.table->text());
        return;
    }
    if (out.result.is_object()) {
        for (const auto& [k, v] : out.result.items())
            std::cout << k << (format == "csv" ? "," : ": ") << flat(v) << "\n";
    } else if (out.result.is_array()) {
        for (const auto& v : out.result) std::cout << flat(v) << "\n";
    } else {
        std::cout << flat(out.result) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pell-equation invariants of polarized hyperkaehler manifolds of K3^[m]-type"};
    app.fallthrough();
    app.require_subcommand(1);
    std::string format;
    app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));

    std::string command;
    std::function<Output()> action;
    auto bind = [&](CLI::App* sub, std::string name, std::function<Output()> f) {
        sub->callback([&, name, f] {
            command = name;
            action = f;
        });
    };

    // shared option storage
    long long d = 0, t = 0, e1 = 1, e = 0, m = 0, n = 0, gamma = 0, ep = 0, count = 10, e_from = 1, e_to = 0,
              prefix = 8, bound = 12, emin = 2, emax = 0, amax = 0, q = 0;
    std::string series = "hilbk3", table_id;
    std::vector<long long> coords;
    bool all = false, oracle = false;
    std::optional<long long> gamma_opt;

    // pell
    auto* pell_cmd = app.add_subcommand("pell", "Pell-type equations e1 a^2 - d b^2 = t");
    pell_cmd->require_subcommand(1);
    auto* pf = pell_cmd->add_subcommand("fundamental", "fundamental unit of a^2 - d b^2 = 1");
    pf->add_option("--d", d)->required();
    bind(pf, "pell fundamental", [&] {
        Output o;
        o.params = {{"d", d}};
        o.result = solution_json(pell::fundamental_solution(d));
        o.provenance = {"pell"};
        return o;
    });
    auto* pm = pell_cmd->add_subcommand("min", "least positive solution");
    pm->add_option("--d", d)->required();
    pm->add_option("--t", t)->required();
    pm->add_option("--e1", e1);
    bind(pm, "pell min", [&] {
        Output o;
        o.params = {{"d", d}, {"t", t}, {"e1", e1}};
        o.result = solution_json(pell::generalized_min(e1, d, t));
        o.provenance = {"pell"};
        return o;
    });
    auto* pc = pell_cmd->add_subcommand("classes", "solution classes of a^2 - d b^2 = t");
    pc->add_option("--d", d)->required();
    pc->add_option("--t", t)->required();
    bind(pc, "pell classes", [&] {
        Output o;
        o.params = {{"d", d}, {"t", t}};
        o.result = json::array();
        for (const auto& c : pell::solution_classes(d, t))
            o.result.push_back({{"a", report::big(c.representative.a)},
                                {"b", report::big(c.representative.b)},
                                {"conjugate_of", c.conjugate_of}});
        o.provenance = {"pell"};
        return o;
    });
    auto* ps = pell_cmd->add_subcommand("stream", "positive solutions by increasing a");
    ps->add_option("--d", d)->required();
    ps->add_option("--t", t)->required();
    ps->add_option("--e1", e1);
    ps->add_option("--count", count);
    bind(ps, "pell stream", [&] {
        Output o;
        o.params = {{"d", d}, {"t", t}, {"e1", e1}, {"count", count}};
        o.result = json::array();
        for (const auto& s : pell::Stream(e1, d, t).take(static_cast<std::size_t>(count)))
            o.result.push_back(solution_json(s));
        o.provenance = {"pell"};
        return o;
    });

    // cones
    auto* cone_cmd = app.add_subcommand("cone", "nef and movable cones");
    cone_cmd->require_subcommand(1);
    auto* cs2 = cone_cmd->add_subcommand("s2", "cones of S^[2], one e or a range");
    cs2->add_option("--e-from", e_from);
    cs2->add_option("--e-to", e_to);
    cs2->add_option("--e", e);
    bind(cs2, "cone s2", [&] {
        Output o;
        long long lo = e ? e : e_from, hi = e ? e : (e_to ? e_to : e_from);
        if (lo < 1 || hi < lo) throw Error("InvalidArgument", "need 1 <= e-from <= e-to");
        o.params = {{"e_from", lo}, {"e_to", hi}};
        o.table = report::s2_cone_table(lo, hi);
        o.result = table_json(*o.table);
        o.provenance = {"s2-cones"};
        return o;
    });
    auto* csm = cone_cmd->add_subcommand("sm", "cones of S^[m]");
    csm->add_option("--e", e)->required();
    csm->add_option("--m", m)->required();
    bind(csm, "cone sm", [&] {
        Output o;
        o.params = {{"e", e}, {"m", m}};
        o.result = cone_json(cones::walls_sm(e, m));
        auto ray = cones::mov_ray_sm(e, m);
        o.result["mov_ray"] = {{"L", report::big(ray.ray.cL)}, {"delta", report::big(ray.ray.cDelta)}, {"case", ray.case_tag}};
        o.provenance = {"sm-cones"};
        return o;
    });
    auto* cff = cone_cmd->add_subcommand("fourfold", "cones of a Picard-rank-2 fourfold");
    cff->add_option("--n", n)->required();
    cff->add_option("--e-prime", ep)->required();
    cff->add_option("--prefix", prefix, "walls shown when there are infinitely many");
    bind(cff, "cone fourfold", [&] {
        Output o;
        o.params = {{"n", n}, {"e_prime", ep}, {"prefix", prefix}};
        o.result = cone_json(cones::fourfold_cones(n, ep, static_cast<std::size_t>(prefix)));
        o.provenance = {"fourfold-cones"};
        return o;
    });
    auto* cw = cone_cmd->add_subcommand("walls", "walls of the movable cone of S^[m]");
    cw->add_option("--e", e)->required();
    cw->add_option("--m", m)->default_val(2);
    bind(cw, "cone walls", [&] {
        Output o;
        if (m == 0) m = 2;
        o.params = {{"e", e}, {"m", m}};
        o.result = cone_json(m == 2 ? cones::walls_s2(e) : cones::walls_sm(e, m));
        o.provenance = {m == 2 ? "s2-walls" : "sm-cones"};
        return o;
    });

    // Riemann-Roch
    auto* chi_cmd = app.add_subcommand("chi", "Euler characteristic of a line bundle");
    chi_cmd->add_option("--series", series)->check(CLI::IsMember({"hilbk3", "kummer"}));
    chi_cmd->add_option("--m", m)->required();
    chi_cmd->add_option("--q", q, "Beauville-Fujiki square")->required();
    bind(chi_cmd, "chi", [&] {
        Output o;
        o.params = {{"series", series}, {"m", m}, {"q", q}};
        o.result = {{"chi", report::big(rrinv::chi({parse_series(series), m, q}))}};
        o.provenance = {"riemann-roch"};
        return o;
    });
    auto* fj = app.add_subcommand("fujiki", "Fujiki constant and b2");
    fj->add_option("--series", series)->check(CLI::IsMember({"hilbk3", "kummer"}));
    fj->add_option("--m", m)->required();
    bind(fj, "fujiki", [&] {
        Output o;
        o.params = {{"series", series}, {"m", m}};
        auto s = parse_series(series);
        o.result = {{"fujiki", to_string(rrinv::fujiki_constant(s, m))}, {"b2", rrinv::betti2(s)}};
        o.provenance = {"riemann-roch"};
        return o;
    });

    // lattices
    auto* lat = app.add_subcommand("lattice", "lattice invariants");
    lat->require_subcommand(1);
    auto* ld = lat->add_subcommand("disc", "discriminant group of h-perp");
    for (auto* s : {ld}) {
        s->add_option("--m", m)->required();
        s->add_option("--n", n)->required();
        s->add_option("--gamma", gamma)->required();
    }
    bind(ld, "lattice disc", [&] {
        Output o;
        o.params = {{"m", m}, {"n", n}, {"gamma", gamma}};
        auto D = lattice::disc_group(m, n, gamma);
        json qs = json::array();
        for (const auto& x : D.generator_q()) qs.push_back(to_string(x));
        o.result = {{"order", D.size()}, {"invariant_factors", D.invariant_factors()}, {"generator_orders", D.orders()}, {"generator_q", qs}};
        auto cc = lattice::moduli_component_count(m, n, gamma);
        o.result["components"] = cc.count ? json(*cc.count) : json(nullptr);
        o.provenance = {"lattice"};
        return o;
    });
    auto* lo = lat->add_subcommand("orbit", "orbit invariants of a vector of the K3^[m] lattice");
    lo->add_option("--m", m)->required();
    lo->add_option("--coords", coords, "23 integers")->required()->delimiter(',');
    bind(lo, "lattice orbit", [&] {
        Output o;
        o.params = {{"m", m}, {"coords", coords}};
        auto v = lattice::make_vector(lattice::k3m(m), std::vector<lattice::i64>(coords.begin(), coords.end()));
        auto k = lattice::orbit_key(v);
        o.result = {{"square", report::big(k.square)},
                    {"divisibility", lattice::divisibility(v)},
                    {"star_order", k.star_order},
                    {"star_q", to_string(k.star_q)}};
        o.provenance = {"lattice"};
        return o;
    });
    auto* ldu = lat->add_subcommand("dual", "strange-duality parameters");
    ldu->add_option("--m", m)->required();
    ldu->add_option("--n", n)->required();
    ldu->add_option("--gamma", gamma)->required();
    bind(ldu, "lattice dual", [&] {
        Output o;
        o.params = {{"m", m}, {"n", n}, {"gamma", gamma}};
        auto p = lattice::strange_dual_params(m, n, gamma);
        o.result = {{"m", p.m}, {"n", p.n}, {"gamma", p.gamma}};
        o.provenance = {"lattice"};
        return o;
    });

    // automorphisms
    auto* aut = app.add_subcommand("aut", "automorphism and birational groups");
    aut->require_subcommand(1);
    auto* as2 = aut->add_subcommand("s2", "Aut and Bir of S^[2] for very general S of degree 2e");
    as2->add_option("--e", e)->required();
    bind(as2, "aut s2", [&] {
        Output o;
        o.params = {{"e", e}};
        o.result = groups_json(autgroups::bir_s2(e));
        o.provenance = {"s2-groups"};
        return o;
    });
    auto* asm_ = aut->add_subcommand("sm", "Bir of S^[m]");
    asm_->add_option("--e", e)->required();
    asm_->add_option("--m", m)->required();
    bind(asm_, "aut sm", [&] {
        Output o;
        o.params = {{"e", e}, {"m", m}};
        auto g = autgroups::bir_sm(e, m);
        o.result = {{"bir", report::group_name(g)}};
        if (g.kind == autgroups::GroupTag::Kind::Unknown) o.result["note"] = g.reason;
        o.provenance = {"sm-groups"};
        return o;
    });
    auto* aff = aut->add_subcommand("fourfold", "Aut and Bir of a Picard-rank-2 fourfold");
    aff->add_option("--n", n)->required();
    aff->add_option("--e-prime", ep)->required();
    bind(aff, "aut fourfold", [&] {
        Output o;
        o.params = {{"n", n}, {"e_prime", ep}};
        o.result = groups_json(autgroups::fourfold_groups(n, ep));
        o.provenance = {"fourfold-groups"};
        return o;
    });
    auto* atab = aut->add_subcommand("table", "fourfold groups for a range of e'");
    atab->add_option("--n", n)->required();
    atab->add_option("--emin", emin);
    atab->add_option("--emax", emax)->required();
    bind(atab, "aut table", [&] {
        Output o;
        o.params = {{"n", n}, {"emin", emin}, {"emax", emax}};
        o.table = report::fourfold_group_table(n, emin, emax);
        o.result = table_json(*o.table);
        o.provenance = {"aut-n3"};
        return o;
    });

    // Heegner divisors
    auto* hg = app.add_subcommand("heegner", "Heegner divisors in the moduli of fourfolds");
    hg->require_subcommand(1);
    auto* hne = hg->add_subcommand("nonempty", "is the divisor of discriminant 2e nonempty");
    auto* hco = hg->add_subcommand("components", "irreducible components of that divisor");
    for (auto* s : {hne, hco}) {
        s->add_option("--n", n)->required();
        s->add_option("--gamma", gamma)->required();
        s->add_option("--e", e)->required();
    }
    bind(hne, "heegner nonempty", [&] {
        Output o;
        o.params = {{"n", n}, {"gamma", gamma}, {"e", e}};
        o.result = {{"nonempty", periods::heegner_nonempty_m2(n, gamma, e)}};
        o.provenance = {"heegner"};
        return o;
    });
    bind(hco, "heegner components", [&] {
        Output o;
        o.params = {{"n", n}, {"gamma", gamma}, {"e", e}};
        auto info = periods::heegner_components_m2(n, gamma, e);
        json keys = json::array();
        for (const auto& k : info.keys) keys.push_back(report::key_json(k));
        o.result = {{"count", info.count ? json(*info.count) : json(nullptr)}, {"keys", keys}, {"note", info.note}};
        o.provenance = {"heegner"};
        return o;
    });

    // period image
    auto* pi = app.add_subcommand("period-image", "Heegner divisors missed by the period map");
    pi->add_option("--m", m)->required();
    pi->add_option("--n", n)->required();
    pi->add_option("--gamma", gamma)->required();
    pi->add_flag("--oracle", oracle, "cross-check with the coordinate search");
    pi->add_option("--bound", bound, "coordinate box for the oracle");
    bind(pi, "period-image", [&] {
        Output o;
        o.params = {{"m", m}, {"n", n}, {"gamma", gamma}};
        auto keys = m == 2 ? periods::excluded_heegner_m2(n, gamma) : periods::excluded_heegner(m, n, gamma);
        std::set<long long> ds;
        json kj = json::array();
        for (const auto& k : keys) {
            ds.insert(k.d);
            kj.push_back(report::key_json(k));
        }
        o.result = {{"excluded_d", ds}, {"keys", kj}};
        if (oracle) {
            o.params["bound"] = bound;
            auto hits = periods::coordinate_oracle(m, n, gamma, bound);
            std::set<periods::HeegnerKey> found;
            for (const auto& wc : periods::wall_constraints(m))
                for (const auto& k : periods::oracle_keys(hits, m, n, gamma, wc)) found.insert(k);
            o.result["oracle_agrees"] = found == std::set<periods::HeegnerKey>(keys.begin(), keys.end());
        }
        o.table = report::excluded_table(m, n, gamma);
        o.provenance = {"period-image"};
        return o;
    });

    auto* nl = app.add_subcommand("nl-family", "degrees e of Hilbert squares inside a Heegner family");
    nl->add_option("--n", n)->required();
    nl->add_option("--gamma", gamma)->required();
    nl->add_option("--amax", amax)->required();
    bind(nl, "nl-family", [&] {
        Output o;
        o.params = {{"n", n}, {"gamma", gamma}, {"amax", amax}};
        o.result = {{"e", periods::nl_family(n, gamma, amax)}};
        o.provenance = {"hilbert-squares"};
        return o;
    });

    auto* hs = app.add_subcommand("hilb-square", "polarizations bL - a delta of square 2n on S^[2]");
    hs->add_option("--n", n)->required();
    hs->add_option("--e", e)->required();
    hs->add_option("--gamma", gamma_opt, "restrict the divisibility (b even for 2)");
    hs->add_flag("--all", all, "list every admissible point");
    bind(hs, "hilb-square", [&] {
        Output o;
        o.params = {{"n", n}, {"e", e}, {"all", all}};
        if (gamma_opt) o.params["gamma"] = *gamma_opt;
        auto pts = periods::hilbert_square_points(n, e, gamma_opt);
        auto pj = [](const periods::HilbPoint& p) {
            return json{{"a", report::big(p.a)}, {"b", report::big(p.b)}, {"gamma", p.gamma}};
        };
        if (all) {
            o.result = json::array();
            for (const auto& p : pts) o.result.push_back(pj(p));
        } else {
            o.result = pts.empty() ? json(nullptr) : pj(pts.front());
        }
        o.provenance = {"hilbert-squares"};
        return o;
    });

    auto* rep = app.add_subcommand("reproduce", "print one of the reference tables");
    rep->add_option("table", table_id, "s2-cones, s2-walls, aut-n3, period-m4, period-m8, period-m12")->required();
    bind(rep, "reproduce", [&] {
        Output o;
        o.params = {{"table", table_id}};
        o.table = report::reproduce(table_id);
        o.result = table_id.rfind("period-", 0) == 0 ? records_json(*o.table) : table_json(*o.table);
        o.provenance = {table_id};
        return o;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int rc = app.exit(err);
        return rc == 0 ? 0 : 2;
    }
    if (format.empty()) format = command == "reproduce" ? "text" : "json";
    try {
        emit(command, format, action());
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
