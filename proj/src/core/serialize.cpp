#include "core/serialize.hpp"

#include <cstdio>
#include <optional>
#include <stdexcept>
#include <vector>

#include "core/errors.hpp"

namespace huygens {

namespace {

using nlohmann::json;

struct Factor {
    Kind kind;
    long freq;
    char angle;  // 'p' or 'q'
};

// One additive term of canonical text, before mode resolution.
struct RawTerm {
    int sign = 1;
    std::optional<Scalar> magnitude;  // absent means 1
    std::vector<Factor> factors;
};

bool looks_like_factor(const std::string& piece) {
    return piece.rfind("cos(", 0) == 0 || piece.rfind("sin(", 0) == 0;
}

Factor parse_factor(const std::string& piece) {
    if (piece.size() < 6 || piece.back() != ')')
        throw ParseError("malformed trig factor: " + piece);
    Factor f;
    f.kind = piece[0] == 'c' ? Kind::cos : Kind::sin;
    const std::string inside = piece.substr(4, piece.size() - 5);
    f.angle = inside.back();
    if (f.angle != 'p' && f.angle != 'q')
        throw ParseError("unknown angle symbol in factor: " + piece);
    const std::string freq_text = inside.substr(0, inside.size() - 1);
    if (freq_text.empty()) {
        f.freq = 1;
    } else {
        try {
            size_t used = 0;
            f.freq = std::stol(freq_text, &used);
            if (used != freq_text.size()) throw std::invalid_argument(freq_text);
        } catch (const std::exception&) {
            throw ParseError("malformed frequency in factor: " + piece);
        }
        if (f.freq <= 0) throw ParseError("non-positive frequency in factor: " + piece);
    }
    return f;
}

// Splits "a + b - c" (leading '-' allowed) into signed term texts.
std::vector<std::pair<int, std::string>> signed_term_texts(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    if (text.empty()) throw ParseError("empty polynomial text");
    size_t pos = 0;
    int sign = 1;
    if (text[0] == '-') {
        sign = -1;
        pos = 1;
    }
    size_t start = pos;
    while (pos < text.size()) {
        if (text.compare(pos, 3, " + ") == 0 || text.compare(pos, 3, " - ") == 0) {
            out.push_back({sign, text.substr(start, pos - start)});
            sign = text[pos + 1] == '+' ? 1 : -1;
            pos += 3;
            start = pos;
        } else {
            ++pos;
        }
    }
    out.push_back({sign, text.substr(start)});
    for (const auto& [s, t] : out)
        if (t.empty()) throw ParseError("empty term in polynomial text: " + text);
    return out;
}

std::vector<std::string> split_on_star(const std::string& term) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t pos = 0; pos <= term.size(); ++pos) {
        if (pos == term.size() || term[pos] == '*') {
            out.push_back(term.substr(start, pos - start));
            start = pos + 1;
        }
    }
    return out;
}

RawTerm parse_raw_term(const std::string& text, bool allow_second_angle) {
    RawTerm term;
    for (const std::string& piece : split_on_star(text)) {
        if (piece.empty()) throw ParseError("empty factor in term: " + text);
        if (looks_like_factor(piece)) {
            Factor f = parse_factor(piece);
            if (!allow_second_angle && f.angle == 'q')
                throw ParseError("angle q in a single-angle polynomial: " + text);
            for (const Factor& seen : term.factors)
                if (seen.angle == f.angle)
                    throw ParseError("repeated angle in term: " + text);
            term.factors.push_back(f);
        } else {
            if (term.magnitude)
                throw ParseError("more than one scalar factor in term: " + text);
            term.magnitude = parse_scalar(piece);
        }
    }
    return term;
}

// Common mode/precision across all parsed magnitudes; exact when none are
// floating. Mixing exact and floating magnitudes is fine on input (exact
// ones are promoted), mirroring Scalar::to_mode_of.
std::pair<Mode, unsigned> resolve_mode(const std::vector<RawTerm>& terms) {
    Mode mode = Mode::exact;
    unsigned bits = 0;
    for (const RawTerm& t : terms)
        if (t.magnitude && t.magnitude->mode() == Mode::floating) {
            mode = Mode::floating;
            bits = std::max(bits, t.magnitude->precision_bits());
        }
    return {mode, bits};
}

Scalar term_coefficient(const RawTerm& term, Mode mode, unsigned bits) {
    Scalar mag = term.magnitude ? *term.magnitude : Scalar::exact(1);
    if (mode == Mode::floating && mag.mode() == Mode::exact) mag = mag.to_floating(bits);
    return term.sign < 0 ? -mag : mag;
}

json phase_to_json(const UnitPoint& phase) {
    return json{{"cos", phase.c.to_string()}, {"sin", phase.s.to_string()}};
}

UnitPoint phase_from_json(const json& j, Mode mode, unsigned bits) {
    if (!j.is_object()) throw ParseError("phase entry must be an object");
    if (j.contains("angle_radians")) {
        if (mode != Mode::floating)
            throw ParseError("angle_radians phases require floating mode");
        if (!j["angle_radians"].is_number())
            throw ParseError("angle_radians must be a number");
        return UnitPoint::from_angle(j["angle_radians"].get<double>(), bits);
    }
    if (!j.contains("cos") || !j.contains("sin"))
        throw ParseError("phase entry needs cos/sin or angle_radians");
    Scalar c = parse_scalar(j["cos"].get<std::string>());
    Scalar s = parse_scalar(j["sin"].get<std::string>());
    if (mode == Mode::floating) {
        if (c.mode() == Mode::exact) c = c.to_floating(bits);
        if (s.mode() == Mode::exact) s = s.to_floating(bits);
    }
    return UnitPoint(std::move(c), std::move(s));
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
    if (text.empty()) throw ParseError("empty scalar text");
    const size_t at = text.find('@');
    if (at == std::string::npos) {
        try {
            mpq_class q(text);
            q.canonicalize();
            return Scalar::exact(q);
        } catch (const std::exception&) {
            throw ParseError("cannot parse exact scalar: " + text);
        }
    }
    unsigned bits = 0;
    try {
        size_t used = 0;
        const std::string bits_text = text.substr(at + 1);
        bits = static_cast<unsigned>(std::stoul(bits_text, &used));
        if (used != bits_text.size()) throw std::invalid_argument(bits_text);
    } catch (const std::exception&) {
        throw ParseError("cannot parse precision annotation: " + text);
    }
    try {
        return Scalar::floating(BigFloat::from_string(text.substr(0, at), bits));
    } catch (const Error&) {
        throw ParseError("cannot parse floating scalar: " + text);
    }
}

TrigPoly parse_trigpoly(const std::string& text) {
    if (text == "0") return TrigPoly::zero(Mode::exact);
    std::vector<RawTerm> terms;
    for (const auto& [sign, term_text] : signed_term_texts(text)) {
        RawTerm t = parse_raw_term(term_text, /*allow_second_angle=*/false);
        t.sign = sign;
        terms.push_back(std::move(t));
    }
    const auto [mode, bits] = resolve_mode(terms);
    TrigPoly out = TrigPoly::zero(mode, bits);
    for (const RawTerm& t : terms) {
        const Scalar coeff = term_coefficient(t, mode, bits);
        if (t.factors.empty())
            out = out + TrigPoly::constant(coeff);
        else
            out = out + TrigPoly::harmonic(t.factors[0].kind, t.factors[0].freq, coeff);
    }
    return out;
}

TrigPoly2 parse_trigpoly2(const std::string& text) {
    if (text == "0") return TrigPoly2::zero(Mode::exact);
    std::vector<RawTerm> terms;
    for (const auto& [sign, term_text] : signed_term_texts(text)) {
        RawTerm t = parse_raw_term(term_text, /*allow_second_angle=*/true);
        t.sign = sign;
        terms.push_back(std::move(t));
    }
    const auto [mode, bits] = resolve_mode(terms);
    TrigPoly2 out = TrigPoly2::zero(mode, bits);
    for (const RawTerm& t : terms) {
        const Scalar coeff = term_coefficient(t, mode, bits);
        TrigPoly first = TrigPoly::constant(coeff);
        TrigPoly second = TrigPoly::constant(coeff.one_like());
        for (const Factor& f : t.factors) {
            if (f.angle == 'p')
                first = TrigPoly::harmonic(f.kind, f.freq, coeff);
            else
                second = TrigPoly::harmonic(f.kind, f.freq, coeff.one_like());
        }
        out = out + TrigPoly2::tensor(first, second);
    }
    return out;
}

nlohmann::json kdata_to_json(const KData& data) {
    json phases = json::array();
    for (const UnitPoint& phase : data.phases()) phases.push_back(phase_to_json(phase));
    json out{{"k", data.k()},
             {"phases", std::move(phases)},
             {"mode", data.mode() == Mode::exact ? "exact" : "float"}};
    if (data.mode() == Mode::floating) out["precision"] = data.precision_bits();
    return out;
}

KData kdata_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("sequence data must be a JSON object");
    if (!j.contains("k") || !j["k"].is_array())
        throw ParseError("sequence data needs an integer array \"k\"");
    std::vector<long> k;
    for (const auto& entry : j["k"]) {
        if (!entry.is_number_integer()) throw ParseError("entries of \"k\" must be integers");
        k.push_back(entry.get<long>());
    }
    Mode mode = Mode::exact;
    if (j.contains("mode")) {
        const std::string text = j["mode"].get<std::string>();
        if (text == "exact")
            mode = Mode::exact;
        else if (text == "float")
            mode = Mode::floating;
        else
            throw ParseError("unknown mode: " + text);
    }
    unsigned bits = 128;
    if (j.contains("precision")) {
        if (!j["precision"].is_number_integer() || j["precision"].get<long>() <= 0)
            throw ParseError("precision must be a positive integer");
        bits = static_cast<unsigned>(j["precision"].get<long>());
    }
    std::vector<UnitPoint> phases;
    if (j.contains("phases")) {
        if (!j["phases"].is_array()) throw ParseError("\"phases\" must be an array");
        for (const auto& entry : j["phases"]) phases.push_back(phase_from_json(entry, mode, bits));
    } else {
        for (size_t i = 0; i < k.size(); ++i)
            phases.push_back(mode == Mode::exact ? UnitPoint::one()
                                                 : UnitPoint::from_angle(0.0, bits));
    }
    try {
        return KData(std::move(k), std::move(phases));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw InvalidArgumentError(e.what());
    }
}

nlohmann::json table_to_json(const HadamardTable& table) {
    json out = kdata_to_json(table.data());
    out["schema"] = "hk-1";
    out["k_max"] = table.max_order();
    json coeffs = json::array();
    for (long nu = 0; nu <= table.max_order(); ++nu) {
        const TrigRational2 sigma = table.sigma(nu);
        coeffs.push_back(json{{"order", nu},
                              {"numerator", sigma.num().canonical_text()},
                              {"denominator", sigma.den().canonical_text()},
                              {"r_rho_power", -nu}});
    }
    out["coefficients"] = std::move(coeffs);
    return out;
}

std::string status_text(VerifyStatus status) {
    switch (status) {
        case VerifyStatus::exact_pass: return "ExactPass";
        case VerifyStatus::numeric_pass: return "NumericPass";
        case VerifyStatus::fail: return "Fail";
    }
    throw InvalidArgumentError("unknown verify status");
}

std::string report_to_json_line(const VerifyReport& report) {
    json j{{"check", report.check_name},
           {"status", status_text(report.status)},
           {"max_residual", report.max_residual},
           {"samples", report.samples},
           {"elapsed_seconds", report.elapsed_seconds},
           {"witness", report.witness}};
    return j.dump();
}

std::string csv_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return std::string(buf);
}

}  // namespace huygens
