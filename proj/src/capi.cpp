#include "huygens/huygens.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "core/errors.hpp"
#include "core/hadamard.hpp"
#include "core/kdata.hpp"
#include "core/serialize.hpp"
#include "core/verify.hpp"

struct hk_kdata {
    huygens::KData value;
};

struct hk_table {
    huygens::HadamardTable value;
};

namespace {

thread_local std::string g_last_error;

hk_status record_error(hk_status status, const char* what) {
    g_last_error = what ? what : "";
    return status;
}

// Maps the library's exception taxonomy onto the C status codes.
template <typename Fn>
hk_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return HK_OK;
    } catch (const huygens::ParseError& e) {
        return record_error(HK_ERROR_PARSE, e.what());
    } catch (const huygens::DegenerateWronskianError& e) {
        return record_error(HK_ERROR_DEGENERATE, e.what());
    } catch (const huygens::OriginError& e) {
        return record_error(HK_ERROR_SINGULAR, e.what());
    } catch (const huygens::NearSingularError& e) {
        return record_error(HK_ERROR_SINGULAR, e.what());
    } catch (const huygens::SingularRayError& e) {
        return record_error(HK_ERROR_SINGULAR, e.what());
    } catch (const huygens::NonPositiveTimeError& e) {
        return record_error(HK_ERROR_INVALID, e.what());
    } catch (const huygens::InvalidArgumentError& e) {
        return record_error(HK_ERROR_INVALID, e.what());
    } catch (const huygens::Error& e) {
        return record_error(HK_ERROR_INTERNAL, e.what());
    } catch (const std::exception& e) {
        return record_error(HK_ERROR_INTERNAL, e.what());
    } catch (...) {
        return record_error(HK_ERROR_INTERNAL, "unknown error");
    }
}

char* copy_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

hk_status require(bool ok, const char* message) {
    return ok ? HK_OK : record_error(HK_ERROR_INVALID, message);
}

constexpr double kDefaultGuard = 1e-10;

double guard_or_default(double guard) { return guard > 0.0 ? guard : kDefaultGuard; }

std::array<double, 2> to_point(const double* xs) { return {xs[0], xs[1]}; }

}  // namespace

extern "C" {

const char* hk_version(void) { return "1.0.0"; }

const char* hk_last_error(void) { return g_last_error.c_str(); }

void hk_string_free(char* text) { delete[] text; }

hk_status hk_kdata_from_json(const char* json_text, hk_kdata** out) {
    if (hk_status s = require(json_text && out, "null argument"); s != HK_OK) return s;
    *out = nullptr;
    return guarded([&] {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(json_text);
        } catch (const nlohmann::json::exception& e) {
            throw huygens::ParseError(e.what());
        }
        *out = new hk_kdata{huygens::kdata_from_json(j)};
    });
}

hk_status hk_kdata_to_json(const hk_kdata* data, char** out_json) {
    if (hk_status s = require(data && out_json, "null argument"); s != HK_OK) return s;
    *out_json = nullptr;
    return guarded([&] { *out_json = copy_string(huygens::kdata_to_json(data->value).dump()); });
}

void hk_kdata_free(hk_kdata* data) { delete data; }

hk_status hk_table_build(const hk_kdata* data, hk_table** out) {
    if (hk_status s = require(data && out, "null argument"); s != HK_OK) return s;
    *out = nullptr;
    return guarded([&] { *out = new hk_table{huygens::HadamardTable(data->value)}; });
}

hk_status hk_table_to_json(const hk_table* table, char** out_json) {
    if (hk_status s = require(table && out_json, "null argument"); s != HK_OK) return s;
    *out_json = nullptr;
    return guarded([&] { *out_json = copy_string(huygens::table_to_json(table->value).dump()); });
}

long hk_table_max_order(const hk_table* table) {
    return table ? table->value.max_order() : -1;
}

void hk_table_free(hk_table* table) { delete table; }

hk_status hk_potential_eval(const hk_table* table, double x1, double x2, double guard,
                            double* out) {
    if (hk_status s = require(table && out, "null argument"); s != HK_OK) return s;
    return guarded([&] {
        *out = table->value.op().potential_value(x1, x2, guard_or_default(guard));
    });
}

hk_status hk_u_eval(const hk_table* table, const double x[2], const double xi[2],
                    long order, double guard, double* out) {
    if (hk_status s = require(table && x && xi && out, "null argument"); s != HK_OK) return s;
    return guarded([&] {
        *out = table->value.u_value(to_point(x), to_point(xi), order, guard_or_default(guard));
    });
}

hk_status hk_heat_eval(const hk_table* table, const double x[2], const double xi[2],
                       double t, double guard, double* out) {
    if (hk_status s = require(table && x && xi && out, "null argument"); s != HK_OK) return s;
    return guarded([&] {
        *out = table->value.heat_value(to_point(x), to_point(xi), t, guard_or_default(guard));
    });
}

hk_status hk_ba_eval(const hk_table* table, const double x[2], const double xi[2],
                     double guard, double* out) {
    if (hk_status s = require(table && x && xi && out, "null argument"); s != HK_OK) return s;
    return guarded([&] {
        *out = table->value.ba_value(to_point(x), to_point(xi), guard_or_default(guard));
    });
}

hk_status hk_verify_run(const hk_kdata* data, const char* suite,
                        const hk_verify_options* options, char** out_json_lines,
                        int* out_fail_count) {
    if (hk_status s = require(data && suite && out_json_lines && out_fail_count,
                              "null argument");
        s != HK_OK)
        return s;
    *out_json_lines = nullptr;
    *out_fail_count = 0;
    return guarded([&] {
        huygens::SuiteOptions opts;
        if (options) {
            if (options->darboux_next > 0) opts.darboux_next = options->darboux_next;
            if (options->oracle_order > 0) opts.oracle_order = options->oracle_order;
            if (options->oracle_rays > 0) opts.oracle_rays = options->oracle_rays;
            if (options->heat_count > 0) opts.heat_count = options->heat_count;
            if (options->probe_count > 0) opts.probe_count = options->probe_count;
            if (options->seed > 0) opts.seed = options->seed;
        }
        std::string lines;
        int failures = 0;
        for (const huygens::VerifyReport& rep :
             huygens::run_suite(data->value, suite, opts)) {
            lines += huygens::report_to_json_line(rep);
            lines += '\n';
            if (!rep.passed()) ++failures;
        }
        *out_json_lines = copy_string(lines);
        *out_fail_count = failures;
    });
}

}  // extern "C"
