#include "doctest.h"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run hkm(const std::string& args) {
    std::string cmd = std::string(HKM_BINARY) + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), got);
    int status = pclose(f);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json result_of(const std::string& args) {
    auto r = hkm(args);
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out).at("result");
}

}  // namespace

TEST_CASE("reproduce matches the checked-in tables byte for byte") {
    for (std::string id : {"s2-cones", "s2-walls", "aut-n3", "period-m4", "period-m8", "period-m12"}) {
        CAPTURE(id);
        auto r = hkm("reproduce " + id);
        CHECK(r.code == 0);
        CHECK(r.out == golden(id + ".txt"));
    }
    CHECK(hkm("cone s2 --e-from 1 --e-to 13 --format csv").out == golden("cone-s2.csv"));
    CHECK(hkm("aut table --n 3 --emax 11 --format csv").out == golden("aut-table-n3.csv"));
    CHECK(hkm("period-image --m 4 --n 1 --gamma 2").out == golden("period-image-m4.json"));
}

TEST_CASE("output is deterministic") {
    auto a = hkm("period-image --m 12 --n 1 --gamma 2 --oracle --bound 3");
    auto b = hkm("period-image --m 12 --n 1 --gamma 2 --oracle --bound 3");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("json payloads") {
    CHECK(result_of("pell min --d 13 --t 1") == nlohmann::json{{"a", 649}, {"b", 180}});
    CHECK(result_of("pell min --d 3 --t -1").is_null());
    CHECK(result_of("pell fundamental --d 61").at("a") == 1766319049);
    CHECK(result_of("period-image --m 4 --n 1 --gamma 2").at("excluded_d") == nlohmann::json{2, 6, 8});
    auto keys = result_of("period-image --m 2 --n 3 --gamma 2").at("keys");
    REQUIRE(keys.size() == 1);
    CHECK(keys[0] == nlohmann::json{{"d", 6}, {"kappa2", -2}, {"div", 1}, {"star", {0}}});
    CHECK(result_of("period-image --m 2 --n 1 --gamma 1 --oracle").at("oracle_agrees") == true);
    CHECK(result_of("chi --m 2 --q 22").at("chi") == 91);
    CHECK(result_of("chi --m 4 --q 2").at("chi") == 15);
    CHECK(result_of("fujiki --series kummer --m 2").at("fujiki") == "9");
    CHECK(result_of("aut s2 --e 5") == nlohmann::json{{"aut", "1"}, {"bir", "Z/2"}});
    CHECK(result_of("aut fourfold --n 3 --e-prime 11") == nlohmann::json{{"aut", "Z x| Z/2"}, {"bir", "Z x| Z/2"}});
    CHECK(result_of("aut sm --e 5 --m 5").at("bir") == "Z/2");
    CHECK(result_of("aut sm --e 5 --m 3").at("bir") == "?");
    CHECK(result_of("cone walls --e 41").at("walls") == nlohmann::json{"82/13", "2542/397"});
    CHECK(result_of("cone fourfold --n 3 --e-prime 2 --prefix 2").at("walls").size() == 2);
    CHECK(result_of("cone fourfold --n 3 --e-prime 2").at("mov") == "sqrt(3/2)");
    CHECK(result_of("heegner nonempty --n 1 --gamma 1 --e 3").at("nonempty") == false);
    CHECK(result_of("heegner components --n 1 --gamma 1 --e 1").at("count") == 2);
    CHECK(result_of("nl-family --n 3 --gamma 2 --amax 3").at("e") == nlohmann::json{1, 7, 13});
    CHECK(result_of("hilb-square --n 3 --e 7 --gamma 2") == nlohmann::json{{"a", 5}, {"b", 2}, {"gamma", 2}});
    CHECK(result_of("hilb-square --n 3 --e 13 --gamma 2 --all").size() == 2);
    CHECK(result_of("hilb-square --n 11 --e 4 --gamma 2").is_null());
    CHECK(result_of("lattice disc --m 2 --n 1 --gamma 1").at("order") == 4);
    CHECK(result_of("lattice dual --m 3 --n 2 --gamma 2") == nlohmann::json{{"m", 3}, {"n", 2}, {"gamma", 2}});
    std::string coords = "1,1";
    for (int i = 2; i < 22; ++i) coords += ",0";
    coords += ",1";
    auto orbit = result_of("lattice orbit --m 2 --coords " + coords);
    CHECK(orbit.at("square") == 0);
    CHECK(orbit.at("divisibility") == 1);
}

TEST_CASE("envelope") {
    auto r = hkm("nl-family --n 1 --gamma 1 --amax 3");
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("command") == "nl-family");
    CHECK(j.at("params").at("amax") == 3);
    CHECK(j.at("provenance").is_array());
    CHECK(r.out.find("\"command\"") < r.out.find("\"params\""));
}

TEST_CASE("text and csv formats") {
    CHECK(hkm("pell min --d 13 --t 1 --format text").out == "a: 649\nb: 180\n");
    CHECK(hkm("pell min --d 13 --t 1 --format csv").out == "a,649\nb,180\n");
    auto t = hkm("aut table --n 3 --emax 3 --format text").out;
    CHECK(t == "e'   2         3\nAut  1         1\nBir  Z x| Z/2  1\n");
}

TEST_CASE("exit codes") {
    CHECK(hkm("--help").code == 0);
    CHECK(hkm("").code == 2);
    CHECK(hkm("pell").code == 2);
    CHECK(hkm("pell min --d 13").code == 2);
    CHECK(hkm("pell min --d x --t 1").code == 2);
    CHECK(hkm("cone s2 --e 3 --format yaml").code == 2);
    CHECK(hkm("reproduce nope").code == 1);
    CHECK(hkm("pell fundamental --d 9").code == 1);
    CHECK(hkm("period-image --m 7 --n 1 --gamma 2").code == 1);
    CHECK(hkm("heegner nonempty --n 5 --gamma 2 --e 1").code == 1);
}

TEST_CASE("domain errors name the error") {
    std::string cmd = std::string(HKM_BINARY) + " reproduce nope 2>&1";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    char buf[256] = {};
    std::string out;
    while (fgets(buf, sizeof buf, f)) out += buf;
    pclose(f);
    CHECK(out.find("UnknownTable") != std::string::npos);
}
