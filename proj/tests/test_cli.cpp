#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qfdiv/cli.hpp"
#include "qfdiv/tabulate.hpp"
#include "table_io.hpp"

using nlohmann::json;

namespace {

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> const& args)
{
    std::ostringstream out, err;
    int code = qfdiv::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json const& schema()
{
    static json const s = [] {
        std::ifstream f(std::string(QFDIV_DOCS_DIR) + "/cli-output.schema.json");
        REQUIRE(f);
        return json::parse(f);
    }();
    return s;
}

// Enough of JSON Schema for the shipped document: $ref, allOf, type,
// enum, pattern, required, properties and items.
bool type_matches(json const& v, std::string const& t)
{
    if (t == "integer")
        return v.is_number_integer();
    if (t == "string")
        return v.is_string();
    if (t == "boolean")
        return v.is_boolean();
    if (t == "object")
        return v.is_object();
    if (t == "array")
        return v.is_array();
    if (t == "null")
        return v.is_null();
    return false;
}

void validate(json const& v, json const& s, std::string const& where, std::vector<std::string>& errors)
{
    if (s.contains("$ref")) {
        std::string ref = s["$ref"];
        validate(v, schema()["$defs"][ref.substr(std::string("#/$defs/").size())], where, errors);
    }
    if (s.contains("allOf"))
        for (auto const& sub : s["allOf"])
            validate(v, sub, where, errors);
    if (s.contains("type")) {
        bool ok = false;
        if (s["type"].is_array()) {
            for (auto const& t : s["type"])
                ok = ok || type_matches(v, t);
        } else {
            ok = type_matches(v, s["type"]);
        }
        if (!ok) {
            errors.push_back(where + ": wrong type " + v.dump());
            return;
        }
    }
    if (s.contains("enum") && std::find(s["enum"].begin(), s["enum"].end(), v) == s["enum"].end())
        errors.push_back(where + ": " + v.dump() + " not in enum");
    if (s.contains("pattern") && v.is_string() && !std::regex_match(v.get<std::string>(), std::regex(s["pattern"].get<std::string>())))
        errors.push_back(where + ": pattern mismatch");
    if (v.is_object()) {
        if (s.contains("required"))
            for (auto const& k : s["required"])
                if (!v.contains(k))
                    errors.push_back(where + ": missing " + k.get<std::string>());
        if (s.contains("properties"))
            for (auto const& [k, sub] : s["properties"].items())
                if (v.contains(k))
                    validate(v[k], sub, where + "." + k, errors);
    }
    if (v.is_array() && s.contains("items"))
        for (std::size_t i = 0; i < v.size(); ++i)
            validate(v[i], s["items"], where + "[" + std::to_string(i) + "]", errors);
}

std::vector<std::string> schema_errors(std::string const& verb, json const& doc)
{
    std::vector<std::string> errors;
    REQUIRE(schema()["$defs"].contains(verb));
    validate(doc, schema()["$defs"][verb], verb, errors);
    return errors;
}

} // namespace

TEST_CASE("check example")
{
    auto r = run({"check", "--p", "5", "--q", "3", "--n", "3"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["d"] == -29);
    CHECK(j["result"]["h"] == 6);
    CHECK(j["conditions"]["verdict"] == "PASS");
    CHECK(j["result"]["order_p"] == 3);
    CHECK(j["consistent"] == true);
}

TEST_CASE("size violation is a usage error")
{
    auto r = run({"check", "--p", "11", "--q", "37", "--n", "3"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("size violation") != std::string::npos);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"check", "--p", "5", "--q", "3", "--n", "3", "--bogus"}).code == 2);
    CHECK(run({"check", "--p", "5", "--q", "3"}).code == 2);
    CHECK(run({"check", "--p", "five", "--q", "3", "--n", "3"}).code == 2);
    CHECK(run({"check", "--p", "5", "--q", "3", "--n", "4"}).code == 2);
    CHECK(run({"table", "--n", "3", "--pmax", "7", "--format", "xml"}).code == 2);
    CHECK(run({"table", "--n", "7", "--pmax", "7", "--range", "paper"}).code == 2);
    CHECK(run({"prop2", "--p", "5", "--q", "3", "--n", "3", "--ell", "5"}).code == 2);
    CHECK(run({"prop1", "--dmin", "-50", "--dmax", "-3", "--abmax", "3", "--ells", "3,x"}).code == 2);
    CHECK(run({"prop1", "--dmin", "-50", "--dmax", "-3", "--abmax", "3", "--ells", "3,4"}).code == 2);
    CHECK(run({"bs", "--lambda2", "3", "--d1", "1", "--d2", "1", "--p", "3", "--ymax", "5"}).code == 2);
    CHECK(run({"scan-t2", "--q", "3", "--n", "3", "--pmax", "20"}).code == 2);
    CHECK(run({"check", "--p", "5", "--q", "3", "--n", "3", "check"}).code == 2);
}

TEST_CASE("theorem4 flags (3, 5) only")
{
    auto r = run({"theorem4", "--pnmax", "300"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["non_divisible"] == json::array({json::array({3, 5})}));
    CHECK(j["cases"].size() == 3);
    CHECK(j["consistent"] == true);
}

TEST_CASE("verbs report consistency through the exit code")
{
    CHECK(run({"order", "--p", "5", "--q", "3", "--n", "3"}).code == 0);
    CHECK(json::parse(run({"order", "--p", "5", "--q", "3", "--n", "3"}).out)["order"] == 3);

    auto r = run({"prop2", "--p", "5", "--q", "7", "--n", "3"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["roots"][0]["root"]["halved"] == true);
    CHECK(j["roots"][0]["root"]["power"] == json::array({"7", "2"}));

    r = run({"bs", "--lambda2", "1", "--d1", "6", "--d2", "1", "--p", "7", "--ymax", "40"});
    CHECK(r.code == 1);
    CHECK(json::parse(r.out)["consistency"] == "VIOLATION");

    r = run({"bs", "--lambda2", "1", "--d1", "2", "--d2", "1", "--p", "3", "--ymax", "20"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["in_E"] == true);

    CHECK(run({"cohn", "--kmax", "60"}).code == 0);
    CHECK(json::parse(run({"cohn", "--kmax", "60"}).out)["squares"] ==
          json::parse(R"([{"k":1,"value":"1"},{"k":3,"value":"4"}])"));
    CHECK(json::parse(run({"ljunggren", "--xmax", "200", "--nmax", "15"}).out)["solutions"] ==
          json::parse(R"([{"x":3,"n":5,"y":"11"}])"));
    CHECK(run({"scan-t2", "--q", "3", "--n", "5", "--pmax", "50"}).code == 0);
}

TEST_CASE("table formats and --out")
{
    auto csv = run({"table", "--n", "3", "--pmax", "7"});
    CHECK(csv.code == 0);
    CHECK(csv.out == qfdiv::render_csv(qfdiv::generate_table(3, 7, qfdiv::QPolicy::AllValid)));
    CHECK(tableio::parse_csv(csv.out).size() > 0);

    auto js = run({"table", "--n", "3", "--pmax", "7", "--format", "json"});
    CHECK(js.out == qfdiv::render_json(qfdiv::generate_table(3, 7, qfdiv::QPolicy::AllValid)));

    auto human = run({"table", "--n", "3", "--pmax", "7", "--format", "human"});
    CHECK(human.code == 0);
    CHECK(human.out.find("PASS") != std::string::npos);

    auto path = std::filesystem::temp_directory_path() / "qfdiv_table_test.csv";
    std::filesystem::remove(path);
    auto written = run({"table", "--n", "5", "--pmax", "7", "--range", "paper", "--out", path.string()});
    CHECK(written.code == 0);
    CHECK(written.out.empty());
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == qfdiv::render_csv(qfdiv::generate_table(5, 7, qfdiv::QPolicy::PaperRange)));
    std::filesystem::remove(path);
}

TEST_CASE("json output validates against the shipped schema and is deterministic")
{
    std::vector<std::pair<std::string, std::vector<std::string>>> cases{
        {"check", {"check", "--p", "5", "--q", "3", "--n", "3"}},
        {"check", {"check", "--p", "5", "--q", "7", "--n", "3"}},
        {"table", {"table", "--n", "3", "--pmax", "7", "--format", "json"}},
        {"order", {"order", "--p", "17", "--q", "7", "--n", "3"}},
        {"prop2", {"prop2", "--p", "5", "--q", "7", "--n", "3"}},
        {"prop2", {"prop2", "--p", "5", "--q", "3", "--n", "3"}},
        {"prop2", {"prop2", "--p", "3", "--q", "7", "--n", "15"}},
        {"prop1", {"prop1", "--dmin", "-200", "--dmax", "-3", "--abmax", "5"}},
        {"bs", {"bs", "--lambda2", "1", "--d1", "1", "--d2", "2", "--p", "3", "--ymax", "20"}},
        {"bs-sweep", {"bs-sweep", "--d1max", "6", "--d2max", "6", "--pmax", "5", "--ymax", "15"}},
        {"cohn", {"cohn", "--kmax", "60"}},
        {"ljunggren", {"ljunggren", "--xmax", "50", "--nmax", "7"}},
        {"theorem4", {"theorem4", "--pnmax", "3000"}},
        {"scan-t2", {"scan-t2", "--q", "7", "--n", "5", "--pmax", "60"}},
    };
    for (auto const& [verb, args] : cases) {
        auto a = run(args);
        auto b = run(args);
        CAPTURE(verb);
        CHECK(a.out == b.out);
        CHECK(a.code == b.code);
        REQUIRE(a.code != 2);
        auto errors = schema_errors(verb, json::parse(a.out));
        for (auto const& e : errors)
            FAIL_CHECK(e);
    }
}

TEST_CASE("schema checker rejects malformed documents")
{
    json doc = json::parse(run({"check", "--p", "5", "--q", "3", "--n", "3"}).out);
    CHECK(schema_errors("check", doc).empty());
    json broken = doc;
    broken.erase("d");
    CHECK_FALSE(schema_errors("check", broken).empty());
    broken = doc;
    broken["conditions"]["verdict"] = "MAYBE";
    CHECK_FALSE(schema_errors("check", broken).empty());
    broken = doc;
    broken["result"]["h"] = "6";
    CHECK_FALSE(schema_errors("check", broken).empty());
}

TEST_CASE("human format")
{
    auto r = run({"check", "--p", "5", "--q", "3", "--n", "3", "--format", "human"});
    CHECK(r.code == 0);
    CHECK(r.out.find("h: 6") != std::string::npos);
    CHECK(r.out.find("verdict: PASS") != std::string::npos);
}

TEST_CASE("verbosity goes to the error stream")
{
    auto quiet = run({"table", "--n", "3", "--pmax", "5"});
    auto loud = run({"table", "--n", "3", "--pmax", "5", "-v"});
    CHECK(quiet.err.empty());
    CHECK_FALSE(loud.err.empty());
    CHECK(quiet.out == loud.out);
}
