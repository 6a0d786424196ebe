#include "w3calc/w3calc.h"

#include "family.hpp"
#include "verify.hpp"

#include <json.hpp>

#include <cstring>
#include <new>
#include <sstream>
#include <string>

struct w3c_poly {
    w3calc::Laurent value;
};

struct w3c_cert {
    w3calc::Certificate value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
w3c_status guarded(Fn fn) {
    try {
        fn();
        g_last_error.clear();
        return W3C_OK;
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return W3C_ERR_PARSE;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return W3C_ERR_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return W3C_ERR_ARGUMENT;
    }
}

const char* require(const char* s, const char* what) {
    if (!s) throw std::invalid_argument(std::string(what) + " must not be NULL");
    return s;
}

} // namespace

extern "C" {

const char* w3c_version(void) { return "1.0.0"; }

const char* w3c_last_error(void) { return g_last_error.c_str(); }

void w3c_poly_free(w3c_poly* p) { delete p; }
void w3c_cert_free(w3c_cert* c) { delete c; }
void w3c_string_free(char* s) { delete[] s; }

int w3c_poly_is_zero(const w3c_poly* p) { return p && p->value.is_zero() ? 1 : 0; }

int w3c_poly_equal(const w3c_poly* a, const w3c_poly* b) {
    if (!a || !b) return a == b ? 1 : 0;
    return a->value == b->value ? 1 : 0;
}

w3c_status w3c_poly_to_json(const w3c_poly* p, char** out_json) {
    return guarded([&] {
        if (!p || !out_json) throw std::invalid_argument("poly and out_json must not be NULL");
        *out_json = dup_string(w3calc::poly_to_json(p->value).dump());
    });
}

w3c_status w3c_poly_from_json(const char* json, w3c_poly** out) {
    return guarded([&] {
        require(json, "json");
        if (!out) throw std::invalid_argument("out must not be NULL");
        w3calc::Laurent p =
            w3calc::poly_from_json(w3calc::coeff_vars(), nlohmann::json::parse(json));
        *out = new w3c_poly{std::move(p)};
    });
}

w3c_status w3c_w3_closed_form(long long k, const char* parity, w3c_poly** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("out must not be NULL");
        w3calc::Parity p = w3calc::parity_parse(require(parity, "parity"));
        *out = new w3c_poly{w3calc::w3_closed_form(k, p)};
    });
}

w3c_status w3c_reduce(const w3c_poly* p, const char* parity, const char* restriction,
                      w3c_poly** out) {
    return guarded([&] {
        if (!p || !out) throw std::invalid_argument("poly and out must not be NULL");
        w3calc::Parity pa = w3calc::parity_parse(require(parity, "parity"));
        w3calc::Restriction r = w3calc::restriction_parse(require(restriction, "restriction"));
        *out = new w3c_poly{w3calc::reduce_mod_relators(p->value, pa, r)};
    });
}

w3c_status w3c_ledger_builtin_json(long long k, char** out_json) {
    return guarded([&] {
        if (!out_json) throw std::invalid_argument("out_json must not be NULL");
        *out_json = dup_string(w3calc::ledger_to_json(w3calc::delta_ledger(k)).dump());
    });
}

w3c_status w3c_ledger_aggregate(const char* ledger_json, long long expect_k,
                                const char* parity, w3c_poly** out) {
    return guarded([&] {
        require(ledger_json, "ledger_json");
        if (!out) throw std::invalid_argument("out must not be NULL");
        w3calc::Parity p = w3calc::parity_parse(require(parity, "parity"));
        w3calc::Ledger l = w3calc::ledger_from_json(nlohmann::json::parse(ledger_json));
        if (expect_k >= 0 && l.k != expect_k) {
            std::ostringstream what;
            what << "ledger is for k=" << l.k << ", requested k=" << expect_k;
            throw std::invalid_argument(what.str());
        }
        *out = new w3c_poly{w3calc::aggregate(l, p)};
    });
}

w3c_status w3c_assembly_check(long long k, const char* parity, int* out_ok) {
    return guarded([&] {
        if (!out_ok) throw std::invalid_argument("out_ok must not be NULL");
        w3calc::Parity p = w3calc::parity_parse(require(parity, "parity"));
        *out_ok = w3calc::assembly_check(k, p) ? 1 : 0;
    });
}

w3c_status w3c_independence(long long kmin, long long kmax, const char* parity,
                            const char* restriction, int nthreads, w3c_cert** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("out must not be NULL");
        w3calc::Parity p = w3calc::parity_parse(require(parity, "parity"));
        w3calc::Restriction r = w3calc::restriction_parse(require(restriction, "restriction"));
        *out = new w3c_cert{w3calc::independence_certificate(kmin, kmax, p, r, nthreads)};
    });
}

long long w3c_cert_rank(const w3c_cert* c) {
    return c ? static_cast<long long>(c->value.rank) : -1;
}

long long w3c_cert_size(const w3c_cert* c) {
    return c ? static_cast<long long>(c->value.labels.size()) : -1;
}

int w3c_cert_full_rank(const w3c_cert* c) { return c && c->value.full_rank() ? 1 : 0; }

w3c_status w3c_cert_to_json(const w3c_cert* c, char** out_json) {
    return guarded([&] {
        if (!c || !out_json) throw std::invalid_argument("cert and out_json must not be NULL");
        *out_json = dup_string(w3calc::certificate_to_json(c->value).dump());
    });
}

w3c_status w3c_verify_suite(const char* suite, long long* out_checks) {
    long long checks = 0;
    std::string failure;
    w3c_status st = guarded([&] {
        std::string name = require(suite, "suite");
        std::vector<std::string> names =
            name == "all" ? w3calc::suite_names() : std::vector<std::string>{name};
        for (const auto& n : names) {
            w3calc::SuiteResult r = w3calc::run_suite(n);
            checks += r.checks;
            if (!r.passed() && failure.empty()) {
                std::ostringstream what;
                what << "suite " << n << ": " << r.failures << " of " << r.checks
                     << " checks failed";
                if (!r.messages.empty()) what << " (" << r.messages.front() << ")";
                failure = what.str();
            }
        }
    });
    if (out_checks) *out_checks = checks;
    if (st != W3C_OK) return st;
    if (!failure.empty()) {
        g_last_error = failure;
        return W3C_ERR_MATH;
    }
    return W3C_OK;
}

} // extern "C"
