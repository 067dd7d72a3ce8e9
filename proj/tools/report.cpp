#include "report.hpp"

#include "hk/pell.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace hk::report {

namespace {

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

}  // namespace

std::string Table::csv() const {
    std::string out;
    for (const auto& r : rows) {
        std::vector<std::string> cells;
        for (const auto& c : r) cells.push_back(csv_cell(c));
        out += join(cells, ",") + "\n";
    }
    return out;
}

std::string Table::text() const {
    std::vector<std::size_t> width;
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], r[i].size());
        }
    std::string out;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
        }
        out += line + "\n";
    }
    return out;
}

json big(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return to_string(v);
}

std::string group_name(const autgroups::GroupTag& g) {
    using K = autgroups::GroupTag::Kind;
    switch (g.kind) {
        case K::Trivial: return "1";
        case K::Z2: return "Z/2";
        case K::Z2xZ2: return "(Z/2)^2";
        case K::InfiniteCyclic: return "Z";
        case K::InfiniteDihedral: return "Z x| Z/2";
        case K::Unknown: return "?";
    }
    return "?";
}

std::string pair_str(const BigInt& a, const BigInt& b) { return "(" + to_string(a) + "," + to_string(b) + ")"; }

json key_json(const periods::HeegnerKey& k) {
    json j = {{"d", k.d}, {"kappa2", k.kappa2}, {"div", k.s}, {"star", k.star}};
    if (k.multiplicity_uncertain) j["multiplicity_uncertain"] = true;
    return j;
}

Table s2_cone_table(long long e_from, long long e_to) {
    Table t;
    std::vector<std::string> head{"e"}, p1{"P_e(1)"}, p5{"P_4e(5)"}, mov{"Mov"}, nef{"Nef"};
    for (long long e = e_from; e <= e_to; ++e) {
        auto r = cones::s2_row(e);
        head.push_back(std::to_string(e));
        p1.push_back(r.square ? "*" : pair_str(r.p1->a, r.p1->b));
        p5.push_back(r.square ? "*" : r.p5 ? pair_str(r.p5->a, r.p5->b) : "-");
        mov.push_back(r.mov.str());
        nef.push_back(r.nef == r.mov ? "=" : r.nef.str());
    }
    t.rows = {head, p1, p5, mov, nef};
    return t;
}

Table s2_wall_table(const std::vector<long long>& es) {
    Table t;
    std::vector<std::string> head{"e"}, p1{"P_e(1)"}, p5{"P_4e(5)"}, mov{"Mov"}, walls{"Walls"};
    for (long long e : es) {
        auto r = cones::s2_row(e);
        auto rep = cones::walls_s2(e);
        if (rep.infinitely_many) throw Error("InvalidArgument", "wall set is infinite for e = " + std::to_string(e));
        head.push_back(std::to_string(e));
        p1.push_back(r.square ? "*" : pair_str(r.p1->a, r.p1->b));
        // the solutions of P_4e(5) that produce the listed walls, slope 2eb/a
        std::set<Rational> wanted(rep.walls.begin(), rep.walls.end());
        std::vector<std::string> sols;
        pell::Stream st(1, 4 * e, 5);
        for (int guard = 0; !wanted.empty() && guard < 64; ++guard) {
            auto s = st.next();
            if (!s) break;
            if (s->a == 0) continue;
            Rational w(BigInt(2 * e) * s->b, s->a);
            if (wanted.erase(w)) sols.push_back(pair_str(s->a, s->b));
        }
        p5.push_back(sols.empty() ? "-" : join(sols, " "));
        mov.push_back(r.mov.str());
        std::vector<std::string> ws;
        for (const auto& w : rep.walls) ws.push_back(to_string(w));
        walls.push_back(ws.empty() ? "-" : join(ws, " "));
    }
    t.rows = {head, p1, p5, mov, walls};
    return t;
}

Table fourfold_group_table(long long n, long long e_from, long long e_to) {
    Table t;
    std::vector<std::string> head{"e'"}, aut{"Aut"}, bir{"Bir"};
    for (long long e = e_from; e <= e_to; ++e) {
        auto g = autgroups::fourfold_groups(n, e);
        head.push_back(std::to_string(e));
        aut.push_back(group_name(g.aut));
        bir.push_back(group_name(g.bir));
    }
    t.rows = {head, aut, bir};
    return t;
}

Table excluded_table(long long m, long long n, long long gamma) {
    Table t;
    t.rows.push_back({"d", "kappa2", "div", "star"});
    auto keys = m == 2 ? periods::excluded_heegner_m2(n, gamma) : periods::excluded_heegner(m, n, gamma);
    for (const auto& k : keys) {
        std::vector<std::string> st;
        for (auto x : k.star) st.push_back(std::to_string(x));
        t.rows.push_back({std::to_string(k.d), std::to_string(k.kappa2), std::to_string(k.s), "(" + join(st, ",") + ")"});
    }
    return t;
}

const std::vector<std::string>& table_ids() {
    static const std::vector<std::string> ids{"s2-cones", "s2-walls", "aut-n3", "period-m4", "period-m8", "period-m12"};
    return ids;
}

Table reproduce(const std::string& id) {
    if (id == "s2-cones") return s2_cone_table(1, 13);
    if (id == "s2-walls") return s2_wall_table({5, 11, 19, 29, 31, 41, 55, 71});
    if (id == "aut-n3") return fourfold_group_table(3, 2, 11);
    if (id == "period-m4") return excluded_table(4, 1, 2);
    if (id == "period-m8") return excluded_table(8, 1, 2);
    if (id == "period-m12") return excluded_table(12, 1, 2);
    throw Error("UnknownTable", "no table named '" + id + "'");
}

}  // namespace hk::report
