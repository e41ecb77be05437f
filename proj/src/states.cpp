#include "sqz/states.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "sqz/special.hpp"

namespace sqz {

namespace {

using json = nlohmann::ordered_json;

Vector coherent_amplitudes(Complex alpha, int cutoff) {
    Vector c(cutoff);
    c(0) = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n < cutoff; ++n) c(n) = c(n - 1) * alpha / std::sqrt(double(n));
    return c;
}

void require_coherent_cutoff(Complex alpha, int cutoff) {
    const double a = std::abs(alpha);
    if (a * a + 6.0 * a + 10.0 > cutoff) {
        const Vector c = coherent_amplitudes(alpha, cutoff);
        std::ostringstream os;
        os << "cutoff " << cutoff << " too small for |alpha|=" << a
           << " (tail mass " << std::max(0.0, 1.0 - c.squaredNorm()) << ")";
        throw std::invalid_argument(os.str());
    }
}

DensityMatrix pure_density(const Vector& v, double tail) {
    DensityMatrix d;
    d.rho = v * v.adjoint();
    d.tail_mass = tail;
    return d;
}

Complex parse_complex(const std::string& s) {
    // forms: "1.5", "2j", "1+2j", "1-2j", "-0.5-1j"
    std::string t = s;
    if (!t.empty() && t.back() == 'j') {
        t.pop_back();
        // split at the last +/- that is not an exponent sign or leading
        for (int i = static_cast<int>(t.size()) - 1; i > 0; --i) {
            const char c = t[i];
            if ((c == '+' || c == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
                const double re = std::stod(t.substr(0, i));
                const std::string im_s = t.substr(i);
                const double im = (im_s == "+" || im_s == "-") ? std::stod(im_s + "1")
                                                              : std::stod(im_s);
                return {re, im};
            }
        }
        return {0.0, t.empty() || t == "+" ? 1.0 : (t == "-" ? -1.0 : std::stod(t))};
    }
    return {std::stod(t), 0.0};
}

}  // namespace

std::string state_to_json(const StateSpec& spec) {
    json j;
    std::visit(
        [&](auto&& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, VacuumSpec>) {
                j["kind"] = "vacuum";
            } else if constexpr (std::is_same_v<T, FockSpec>) {
                j["kind"] = "fock";
                j["m"] = s.m;
            } else if constexpr (std::is_same_v<T, CoherentSpec>) {
                j["kind"] = "coherent";
                j["alpha"] = {s.alpha.real(), s.alpha.imag()};
            } else if constexpr (std::is_same_v<T, CatSpec>) {
                j["kind"] = "cat";
                j["alpha"] = {s.alpha.real(), s.alpha.imag()};
                j["parity"] = s.parity > 0 ? "+" : "-";
            } else {
                j["kind"] = "thermal";
                j["T"] = s.temperature;
            }
        },
        spec);
    return j.dump();
}

StateSpec state_from_json(const std::string& json_text) {
    const json j = json::parse(json_text);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "vacuum") return VacuumSpec{};
    if (kind == "fock") return FockSpec{j.at("m").get<int>()};
    if (kind == "coherent") {
        const auto a = j.at("alpha");
        return CoherentSpec{Complex(a.at(0).get<double>(), a.at(1).get<double>())};
    }
    if (kind == "cat") {
        const auto a = j.at("alpha");
        const std::string p = j.at("parity").get<std::string>();
        if (p != "+" && p != "-") throw std::invalid_argument("cat parity must be + or -");
        return CatSpec{Complex(a.at(0).get<double>(), a.at(1).get<double>()),
                       p == "+" ? +1 : -1};
    }
    if (kind == "thermal") return ThermalSpec{j.at("T").get<double>()};
    throw std::invalid_argument("unknown state kind: " + kind);
}

StateSpec parse_state(const std::string& text) {
    if (!text.empty() && text.front() == '{') return state_from_json(text);
    const auto c1 = text.find(':');
    const std::string kind = text.substr(0, c1);
    if (kind == "vacuum") return VacuumSpec{};
    if (c1 == std::string::npos)
        throw std::invalid_argument("state '" + text + "' needs a parameter, e.g. fock:1");
    const std::string rest = text.substr(c1 + 1);
    if (kind == "fock") return FockSpec{std::stoi(rest)};
    if (kind == "coherent") return CoherentSpec{parse_complex(rest)};
    if (kind == "thermal") return ThermalSpec{std::stod(rest)};
    if (kind == "cat") {
        const auto c2 = rest.rfind(':');
        if (c2 == std::string::npos)
            throw std::invalid_argument("cat state needs parity, e.g. cat:2+0j:+");
        const std::string p = rest.substr(c2 + 1);
        if (p != "+" && p != "-") throw std::invalid_argument("cat parity must be + or -");
        return CatSpec{parse_complex(rest.substr(0, c2)), p == "+" ? +1 : -1};
    }
    throw std::invalid_argument("unknown state kind: " + kind);
}

std::string state_name(const StateSpec& spec) {
    std::ostringstream os;
    std::visit(
        [&](auto&& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, VacuumSpec>) {
                os << "vacuum";
            } else if constexpr (std::is_same_v<T, FockSpec>) {
                os << "fock:" << s.m;
            } else if constexpr (std::is_same_v<T, CoherentSpec>) {
                os << "coherent:" << s.alpha.real() << "+" << s.alpha.imag() << "j";
            } else if constexpr (std::is_same_v<T, CatSpec>) {
                os << "cat:" << s.alpha.real() << "+" << s.alpha.imag() << "j:"
                   << (s.parity > 0 ? "+" : "-");
            } else {
                os << "thermal:" << s.temperature;
            }
        },
        spec);
    return os.str();
}

std::optional<Vector> make_pure_vector(const StateSpec& spec, int cutoff) {
    if (cutoff < 2) throw std::invalid_argument("cutoff must be >= 2");
    if (std::holds_alternative<VacuumSpec>(spec)) {
        Vector v = Vector::Zero(cutoff);
        v(0) = 1.0;
        return v;
    }
    if (const auto* f = std::get_if<FockSpec>(&spec)) {
        if (f->m < 0) throw std::invalid_argument("fock index must be >= 0");
        if (f->m >= cutoff)
            throw std::invalid_argument("fock index " + std::to_string(f->m) +
                                        " outside cutoff " + std::to_string(cutoff));
        Vector v = Vector::Zero(cutoff);
        v(f->m) = 1.0;
        return v;
    }
    if (const auto* c = std::get_if<CoherentSpec>(&spec)) {
        require_coherent_cutoff(c->alpha, cutoff);
        return coherent_amplitudes(c->alpha, cutoff);
    }
    if (const auto* c = std::get_if<CatSpec>(&spec)) {
        if (std::abs(c->alpha) <= 0.0)
            throw std::invalid_argument("cat state requires |alpha| > 0");
        require_coherent_cutoff(c->alpha, cutoff);
        const Vector plus = coherent_amplitudes(c->alpha, cutoff);
        const Vector minus = coherent_amplitudes(-c->alpha, cutoff);
        const double norm_sq =
            2.0 * (1.0 + c->parity * std::exp(-2.0 * std::norm(c->alpha)));
        Vector v = (plus + double(c->parity) * minus) / std::sqrt(norm_sq);
        return v;
    }
    return std::nullopt;  // thermal is mixed
}

DensityMatrix make_density(const StateSpec& spec, int cutoff) {
    if (const auto* t = std::get_if<ThermalSpec>(&spec)) {
        const double T = t->temperature;
        if (T <= 0.0) throw std::invalid_argument("thermal temperature must be > 0");
        // Z = 1/2 cosech(1/(2T)) summed over the full (untruncated) spectrum;
        // the truncated trace deficit is the tail mass.
        const double z = 0.5 / std::sinh(0.5 / T);
        DensityMatrix d;
        d.rho = Matrix::Zero(cutoff, cutoff);
        double trace = 0.0;
        for (int n = 0; n < cutoff; ++n) {
            const double w = std::exp(-(n + 0.5) / T) / z;
            d.rho(n, n) = w;
            trace += w;
        }
        d.tail_mass = std::max(0.0, 1.0 - trace);
        if (d.tail_mass > 1e-6) {
            std::ostringstream os;
            os << "cutoff " << cutoff << " too small for thermal T=" << T
               << " (tail mass " << d.tail_mass << ")";
            throw std::invalid_argument(os.str());
        }
        return d;
    }
    const Vector v = *make_pure_vector(spec, cutoff);
    return pure_density(v, std::max(0.0, 1.0 - v.squaredNorm()));
}

double fock_wavefunction(unsigned n, double x) {
    const LogVal h = hermite_scaled(n, x);
    if (h.sign == 0) return 0.0;
    const double log_mag = h.log_abs - 0.5 * x * x - 0.25 * std::log(M_PI) -
                           0.5 * (n * std::log(2.0) + log_factorial(n));
    return h.sign * std::exp(log_mag);
}

void fock_wavefunctions(double x, std::vector<double>& values) {
    if (values.empty()) return;
    values[0] = std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x);
    if (values.size() > 1) values[1] = std::sqrt(2.0) * x * values[0];
    for (size_t n = 1; n + 1 < values.size(); ++n)
        values[n + 1] = std::sqrt(2.0 / (n + 1.0)) * x * values[n] -
                        std::sqrt(n / (n + 1.0)) * values[n - 1];
}

Complex coherent_wavefunction(Complex alpha, double x) {
    const Complex expo = -0.5 * x * x + std::sqrt(2.0) * alpha * x - 0.5 * alpha * alpha -
                         0.5 * std::norm(alpha);
    return std::pow(M_PI, -0.25) * std::exp(expo);
}

}  // namespace sqz
