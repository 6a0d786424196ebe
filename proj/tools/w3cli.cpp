#include <w3calc/w3calc.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct CliError {
    int code;
    std::string message;
};

struct Poly {
    w3c_poly* h = nullptr;
    Poly() = default;
    Poly(const Poly&) = delete;
    Poly& operator=(const Poly&) = delete;
    ~Poly() { w3c_poly_free(h); }
};

struct Cert {
    w3c_cert* h = nullptr;
    Cert() = default;
    Cert(const Cert&) = delete;
    Cert& operator=(const Cert&) = delete;
    ~Cert() { w3c_cert_free(h); }
};

void ok(w3c_status st) {
    if (st == W3C_OK) return;
    throw CliError{st == W3C_ERR_MATH ? 1 : 2, w3c_last_error()};
}

json poly_json(const w3c_poly* p) {
    char* s = nullptr;
    ok(w3c_poly_to_json(p, &s));
    json j = json::parse(s);
    w3c_string_free(s);
    return j;
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

int threads_from_env() {
    const char* v = std::getenv("W3_THREADS");
    if (!v) return 0;
    std::string s(v);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw CliError{2, "W3_THREADS must be a positive integer, got '" + s + "'"};
    errno = 0;
    long n = std::strtol(s.c_str(), nullptr, 10);
    if (errno != 0 || n <= 0 || n > 4096)
        throw CliError{2, "W3_THREADS must be a positive integer, got '" + s + "'"};
    return static_cast<int>(n);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{2, "cannot read ledger file '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string render_poly(const json& poly) {
    if (poly.empty()) return "0";
    std::string out;
    for (const auto& term : poly) {
        std::string c = term.at("coeff").get<std::string>();
        bool negative = !c.empty() && c[0] == '-';
        if (negative) c = c.substr(1);
        if (c.size() > 2 && c.compare(c.size() - 2, 2, "/1") == 0) c = c.substr(0, c.size() - 2);
        std::string mono;
        const char* names[2] = {"t1", "t3"};
        for (int i = 0; i < 2; ++i) {
            long long e = term.at("exponents")[i].get<long long>();
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e != 1) mono += "^" + std::to_string(e);
        }
        std::string piece = mono.empty() ? c : (c == "1" ? mono : c + "*" + mono);
        if (out.empty())
            out = (negative ? "-" : "") + piece;
        else
            out += (negative ? " - " : " + ") + piece;
    }
    return out;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

int run_w3(long long k, const std::string& parity, bool mod_r, const std::string& ledger_path,
           bool human) {
    auto t0 = std::chrono::steady_clock::now();
    json report;
    report["command"] = "w3";
    report["inputs"]["k"] = k;
    report["inputs"]["parity"] = parity;
    report["inputs"]["mod_r"] = mod_r;
    report["inputs"]["from_ledger"] = ledger_path.empty() ? json(nullptr) : json(ledger_path);
    Poly w;
    if (!ledger_path.empty()) {
        std::string text = read_file(ledger_path);
        ok(w3c_ledger_aggregate(text.c_str(), k, parity.c_str(), &w.h));
        Poly closed;
        ok(w3c_w3_closed_form(k, parity.c_str(), &closed.h));
        report["outputs"]["matches_closed_form"] = w3c_poly_equal(w.h, closed.h) == 1;
    } else {
        ok(w3c_w3_closed_form(k, parity.c_str(), &w.h));
    }
    report["outputs"]["w3"] = poly_json(w.h);
    if (mod_r) {
        Poly res;
        ok(w3c_reduce(w.h, parity.c_str(), "none", &res.h));
        report["outputs"]["residue"] = poly_json(res.h);
        report["outputs"]["residue_is_zero"] = w3c_poly_is_zero(res.h) == 1;
    }
    report["status"] = "ok";
    emit(report);
    if (human) {
        std::cerr << "W3 at k=" << k << ", " << parity << " parity: "
                  << render_poly(report["outputs"]["w3"]) << "\n";
        if (!ledger_path.empty())
            std::cerr << "ledger aggregate "
                      << (report["outputs"]["matches_closed_form"].get<bool>()
                              ? "matches"
                              : "does NOT match")
                      << " the closed form\n";
        if (mod_r)
            std::cerr << "residue: " << render_poly(report["outputs"]["residue"]) << "\n";
        std::cerr << "done in " << ms_since(t0) << " ms\n";
    }
    return 0;
}

int run_independence(long long kmin, long long kmax, const std::string& parity, bool topological,
                     int nthreads, bool human) {
    auto t0 = std::chrono::steady_clock::now();
    const char* restriction = topological ? "topological" : "none";
    json report;
    report["command"] = "independence";
    report["inputs"]["kmin"] = kmin;
    report["inputs"]["kmax"] = kmax;
    report["inputs"]["parity"] = parity;
    report["inputs"]["restriction"] = restriction;
    Cert cert;
    ok(w3c_independence(kmin, kmax, parity.c_str(), restriction, nthreads, &cert.h));
    char* s = nullptr;
    ok(w3c_cert_to_json(cert.h, &s));
    report["outputs"]["certificate"] = json::parse(s);
    w3c_string_free(s);
    bool full = w3c_cert_full_rank(cert.h) == 1;
    report["outputs"]["full_rank"] = full;
    report["status"] = full ? "ok" : "fail";
    emit(report);
    if (human) {
        std::cerr << "rank " << w3c_cert_rank(cert.h) << " of " << w3c_cert_size(cert.h)
                  << " elements (restriction " << restriction << "): "
                  << (full ? "independent" : "NOT independent") << "\n"
                  << "done in " << ms_since(t0) << " ms\n";
    }
    return full ? 0 : 1;
}

int run_verify(const std::string& suite, bool human) {
    auto t0 = std::chrono::steady_clock::now();
    json report;
    report["command"] = "verify";
    report["inputs"]["suite"] = suite;
    std::vector<std::string> names;
    if (suite == "all")
        names = {"relations", "expansions", "hexagon", "ledger"};
    else
        names = {suite};
    bool all_passed = true;
    json suites = json::object();
    for (const auto& name : names) {
        long long checks = 0;
        w3c_status st = w3c_verify_suite(name.c_str(), &checks);
        if (st != W3C_OK && st != W3C_ERR_MATH) throw CliError{2, w3c_last_error()};
        bool passed = st == W3C_OK;
        suites[name]["checks"] = checks;
        suites[name]["passed"] = passed;
        if (!passed) {
            suites[name]["failure"] = w3c_last_error();
            all_passed = false;
        }
    }
    report["outputs"]["suites"] = suites;
    report["status"] = all_passed ? "ok" : "fail";
    emit(report);
    if (human) {
        for (const auto& [name, r] : suites.items())
            std::cerr << "suite " << name << ": " << r["checks"].get<long long>() << " checks, "
                      << (r["passed"].get<bool>() ? "passed" : "FAILED") << "\n";
        std::cerr << "done in " << ms_since(t0) << " ms\n";
    }
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariant calculus for the twisted-family ledger"};
    app.require_subcommand(1);

    auto* w3 = app.add_subcommand("w3", "Closed-form or ledger-aggregated invariant at one k");
    long long k = 0;
    std::string w3_parity;
    bool mod_r = false, w3_human = false;
    std::string ledger_path;
    w3->add_option("--k", k, "family index, k >= 3")->required();
    w3->add_option("--parity", w3_parity, "ambient parity")
        ->required()
        ->check(CLI::IsMember({"even", "odd"}));
    w3->add_flag("--mod-r", mod_r, "also report the residue modulo the relator span");
    w3->add_option("--from-ledger", ledger_path, "aggregate this ledger JSON file instead");
    w3->add_flag("--human", w3_human, "render a summary on stderr");

    auto* ind = app.add_subcommand("independence", "Rank certificate over a k range");
    long long kmin = 4, kmax = 64;
    std::string ind_parity;
    bool topological = false, ind_human = false;
    ind->add_option("--kmin", kmin, "first k, at least 4");
    ind->add_option("--kmax", kmax, "last k");
    ind->add_option("--parity", ind_parity, "ambient parity")
        ->required()
        ->check(CLI::IsMember({"even", "odd"}));
    ind->add_flag("--topological", topological, "restrict functionals to surviving positions");
    ind->add_flag("--human", ind_human, "render a summary on stderr");

    auto* ver = app.add_subcommand("verify", "Run property suites");
    std::string suite = "all";
    bool ver_human = false;
    ver->add_option("--suite", suite, "relations|expansions|hexagon|ledger|all")
        ->check(CLI::IsMember({"relations", "expansions", "hexagon", "ledger", "all"}));
    ver->add_flag("--human", ver_human, "render a summary on stderr");

    try {
        app.parse(argc, argv);
        int nthreads = threads_from_env();
        if (w3->parsed()) return run_w3(k, w3_parity, mod_r, ledger_path, w3_human);
        if (ind->parsed())
            return run_independence(kmin, kmax, ind_parity, topological, nthreads, ind_human);
        return run_verify(suite, ver_human);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        json report;
        report["command"] = argc > 1 ? argv[1] : "";
        report["error"] = e.what();
        report["status"] = "fail";
        emit(report);
        return 2;
    } catch (const CliError& e) {
        json report;
        report["command"] = argc > 1 ? argv[1] : "";
        report["error"] = e.message;
        report["status"] = "fail";
        emit(report);
        return e.code;
    }
}
