#include "symdet/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace symdet {

namespace {

using nlohmann::json;

void append_matrix(std::ostringstream &os, const CMat &m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (r || c) {
                os << ',';
            }
            os << '[' << fmt17(m(r, c).real()) << ',' << fmt17(m(r, c).imag()) << ']';
        }
    }
    os << ']';
}

void append_vector(std::ostringstream &os, const CVec &v) {
    os << '[';
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) {
            os << ',';
        }
        os << '[' << fmt17(v[i].real()) << ',' << fmt17(v[i].imag()) << ']';
    }
    os << ']';
}

void append_doubles(std::ostringstream &os, const std::vector<double> &xs) {
    os << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) {
            os << ',';
        }
        os << fmt17(xs[i]);
    }
    os << ']';
}

CMat parse_matrix(const json &entries, std::size_t dim, const std::string &name) {
    if (!entries.is_array() || entries.size() != dim * dim) {
        throw std::invalid_argument(name + ": expected " + std::to_string(dim * dim) +
                                    " [re, im] pairs (row-major)");
    }
    CMat m(dim, dim);
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const json &pair = entries[k];
        if (!pair.is_array() || pair.size() != 2) {
            throw std::invalid_argument(name + ": entry " + std::to_string(k) +
                                        " is not an [re, im] pair");
        }
        m(k / dim, k % dim) = cplx(pair[0].get<double>(), pair[1].get<double>());
    }
    return m;
}

} // namespace

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string dump_ensemble_json(const Ensemble &e) {
    std::ostringstream os;
    os << "{\"dim\":" << e.dim << ",\"priors\":";
    append_doubles(os, e.priors);
    os << ",\"states\":[";
    for (std::size_t i = 0; i < e.states.size(); ++i) {
        if (i) {
            os << ',';
        }
        append_matrix(os, e.states[i]);
    }
    os << "]}";
    return os.str();
}

std::string dump_povm_json(const Povm &p) {
    std::ostringstream os;
    os << "{\"dim\":" << p.dim << ",\"elements\":[";
    for (std::size_t i = 0; i < p.elements.size(); ++i) {
        if (i) {
            os << ',';
        }
        append_matrix(os, p.elements[i]);
    }
    os << ']';
    if (p.dim == 2) {
        try {
            const Rank1Real r = to_rank1_real(p);
            os << ",\"weights\":";
            append_doubles(os, r.weights);
            os << ",\"angles_rad\":";
            append_doubles(os, r.angles);
        } catch (const std::invalid_argument &) {
            // not rank-1 real; emit elements only
        }
    }
    os << '}';
    return os.str();
}

std::string dump_plan_json(const NaimarkPlan &plan) {
    std::ostringstream os;
    os << "{\"M\":" << plan.M << ",\"m\":" << plan.m << ",\"gamma\":" << fmt17(plan.gamma);
    os << ",\"omega_vecs\":[";
    for (std::size_t j = 0; j < 3; ++j) {
        if (j) {
            os << ',';
        }
        append_vector(os, plan.omega_vecs[j]);
    }
    os << "],\"Omega_vecs\":[";
    for (std::size_t j = 0; j < 4; ++j) {
        if (j) {
            os << ',';
        }
        append_vector(os, plan.Omega_vecs[j]);
    }
    os << "],\"U1\":";
    append_matrix(os, plan.U1);
    os << ",\"U2\":";
    append_matrix(os, plan.U2);
    os << ",\"outcome_map\":[";
    for (std::size_t j = 0; j < 4; ++j) {
        if (j) {
            os << ',';
        }
        os << plan.outcome_map[j];
    }
    os << "]}";
    return os.str();
}

std::string sweep_to_csv(const SweepCurve &curve, bool bits) {
    std::ostringstream os;
    os << "theta_rad," << (bits ? "info_bits" : "info_nats") << '\n';
    const double scale = bits ? 1.0 / std::log(2.0) : 1.0;
    for (std::size_t i = 0; i < curve.thetas.size(); ++i) {
        os << fmt17(curve.thetas[i]) << ',' << fmt17(curve.values[i] * scale) << '\n';
    }
    return os.str();
}

std::string stats_to_csv(const DetectionStats &stats) {
    std::ostringstream os;
    os << "port,probability\n";
    for (std::size_t j = 0; j < stats.probs.size(); ++j) {
        os << j << ',' << fmt17(stats.probs[j]) << '\n';
    }
    return os.str();
}

Povm load_povm_json(const std::string &text) {
    const json doc = json::parse(text);
    Povm p;
    if (doc.contains("elements")) {
        if (!doc.contains("dim")) {
            throw std::invalid_argument("povm: missing \"dim\"");
        }
        p.dim = doc["dim"].get<std::size_t>();
        const json &els = doc["elements"];
        if (!els.is_array() || els.empty()) {
            throw std::invalid_argument("povm: \"elements\" must be a non-empty array");
        }
        for (std::size_t i = 0; i < els.size(); ++i) {
            p.elements.push_back(parse_matrix(els[i], p.dim, "povm: element " + std::to_string(i)));
        }
        return p;
    }
    if (doc.contains("weights") && doc.contains("angles_rad")) {
        Rank1Real r;
        r.weights = doc["weights"].get<std::vector<double>>();
        r.angles = doc["angles_rad"].get<std::vector<double>>();
        if (r.weights.size() != r.angles.size()) {
            throw std::invalid_argument("povm: \"weights\" and \"angles_rad\" lengths differ");
        }
        return from_rank1_real(r);
    }
    throw std::invalid_argument(
        "povm: expected either \"elements\" or the compact \"weights\"/\"angles_rad\" form");
}

Ensemble load_ensemble_json(const std::string &text) {
    const json doc = json::parse(text);
    for (const char *key : {"dim", "priors", "states"}) {
        if (!doc.contains(key)) {
            throw std::invalid_argument(std::string("ensemble: missing \"") + key + "\"");
        }
    }
    const std::size_t dim = doc["dim"].get<std::size_t>();
    std::vector<double> priors = doc["priors"].get<std::vector<double>>();
    const json &states = doc["states"];
    if (!states.is_array()) {
        throw std::invalid_argument("ensemble: \"states\" must be an array");
    }
    std::vector<CMat> mats;
    for (std::size_t i = 0; i < states.size(); ++i) {
        mats.push_back(parse_matrix(states[i], dim, "ensemble: state " + std::to_string(i)));
    }
    return make_ensemble(dim, std::move(mats), std::move(priors));
}

} // namespace symdet
