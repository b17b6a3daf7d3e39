#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qi/cli/cli.hpp"
#include "qi/cli/json_io.hpp"
#include "qi/errors.hpp"

namespace qi::cli {

using json = nlohmann::json;

namespace {

// Number-like JSON values compare by decimal representation.
bool scalar_text(const json& j, std::string& s) {
    if (j.is_number_integer()) {
        s = j.is_number_unsigned() ? std::to_string(j.get<std::uint64_t>()) : std::to_string(j.get<std::int64_t>());
        return true;
    }
    if (j.is_string()) {
        s = j.get<std::string>();
        return true;
    }
    return false;
}

std::vector<std::string> fixture_args(const json& f, const std::filesystem::path& dir) {
    std::vector<std::string> args;
    const std::string cmd = f.at("command").get<std::string>();
    std::istringstream words(cmd);
    for (std::string w; words >> w;) args.push_back(w);
    auto value_text = [&](const std::string& key, const json& v) {
        if (key == "quiver" && v.is_string()) {
            std::filesystem::path p(v.get<std::string>());
            return (p.is_relative() ? dir / p : p).string();
        }
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    };
    const json& a = f.value("args", json::object());
    if (a.is_object()) {
        for (const auto& [k, v] : a.items()) {
            if (v.is_boolean()) {
                if (v.get<bool>()) args.push_back("--" + k);
                continue;
            }
            args.push_back("--" + k);
            args.push_back(value_text(k, v));
        }
    } else if (a.is_array()) {
        for (const auto& v : a) args.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    } else {
        throw InputError("fixture args must be an object or an array");
    }
    return args;
}

}  // namespace

bool matches(const json& expected, const json& actual, bool prefix, std::string& diff, const std::string& path) {
    std::string se, sa;
    if (scalar_text(expected, se) && scalar_text(actual, sa)) {
        if (se == sa) return true;
        diff = path + ": expected " + expected.dump() + ", got " + actual.dump();
        return false;
    }
    if (expected.is_object()) {
        if (!actual.is_object()) {
            diff = path + ": expected an object, got " + actual.dump();
            return false;
        }
        for (const auto& [k, v] : expected.items()) {
            if (!actual.contains(k)) {
                diff = path + "." + k + ": missing";
                return false;
            }
            if (!matches(v, actual.at(k), prefix, diff, path + "." + k)) return false;
        }
        return true;
    }
    if (expected.is_array()) {
        if (!actual.is_array()) {
            diff = path + ": expected an array, got " + actual.dump();
            return false;
        }
        if (prefix ? expected.size() > actual.size() : expected.size() != actual.size()) {
            diff = path + ": expected " + std::to_string(expected.size()) + " entries, got " + std::to_string(actual.size());
            return false;
        }
        for (std::size_t k = 0; k < expected.size(); ++k)
            if (!matches(expected[k], actual[k], prefix, diff, path + "[" + std::to_string(k) + "]")) return false;
        return true;
    }
    if (expected == actual) return true;
    diff = path + ": expected " + expected.dump() + ", got " + actual.dump();
    return false;
}

int run_fixtures(const std::string& path, std::ostream& out, std::ostream& err) {
    json doc;
    std::vector<json> fixtures;
    std::filesystem::path dir;
    try {
        std::ifstream in(path);
        if (!in) throw InputError("cannot read fixture file '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        doc = json_io::parse(ss.str(), path);
        const json& list = doc.is_array() ? doc : doc.at("fixtures");
        if (!list.is_array()) throw InputError("fixtures must be a list");
        fixtures.assign(list.begin(), list.end());
        dir = std::filesystem::path(path).parent_path();
    } catch (const std::exception& e) {
        err << "input error: " << e.what() << "\n";
        out << json{{"error", {{"class", "input"}, {"message", e.what()}}}}.dump() << "\n";
        return kInputError;
    }

    json report = json::array();
    std::size_t passed = 0;
    for (std::size_t k = 0; k < fixtures.size(); ++k) {
        const json& f = fixtures[k];
        const std::string name = f.value("name", "fixture " + std::to_string(k));
        json entry = {{"name", name}};
        std::string diff;
        bool ok = false;
        try {
            auto args = fixture_args(f, dir);
            std::ostringstream o, e;
            const int code = run(args, o, e);
            const int expected_code = f.value("exit", 0);
            json actual = json_io::parse(o.str(), "command output");
            if (code != expected_code) {
                diff = "exit code " + std::to_string(code) + ", expected " + std::to_string(expected_code) + "; " + e.str();
            } else {
                const json& target = actual.contains("result") ? actual["result"] : actual;
                ok = matches(f.value("expected", json::object()), target, f.value("prefix", false), diff);
            }
        } catch (const std::exception& ex) {
            diff = std::string("fixture error: ") + ex.what();
        }
        entry["status"] = ok ? "pass" : "fail";
        if (!ok) entry["diff"] = diff;
        passed += ok ? 1 : 0;
        report.push_back(entry);
    }
    json summary = {{"command", "fixtures run"},
                    {"inputs", {{"path", path}}},
                    {"result", {{"fixtures", report}, {"passed", std::to_string(passed)}, {"failed", std::to_string(fixtures.size() - passed)}}}};
    out << summary.dump(2) << "\n";
    return passed == fixtures.size() ? kOk : kFixtureFailure;
}

}  // namespace qi::cli
