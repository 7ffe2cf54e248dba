#include "ghz/serialize.h"

#include <limits>
#include <sstream>

#include "ghz/errors.h"

namespace ghz {

Json to_json(const PauliOperator &op) { return Json{{"text", op.str()}, {"phase", op.phase().exponent()}}; }

PauliOperator pauli_from_json(const Json &j) {
    auto op = PauliOperator::parse(j.at("text").get<std::string>());
    if (j.contains("phase") && j.at("phase").get<int>() != op.phase().exponent()) {
        throw DomainError("operator phase field disagrees with its text");
    }
    return op;
}

Json to_json(const RotatedState &state) {
    return Json{{"n", state.label.n()},
                {"label_bits", state.label.bits_str()},
                {"sign", state.label.sign()},
                {"phi", state.phi}};
}

RotatedState rotated_state_from_json(const Json &j) {
    auto label = GhzLabel::parse(j.at("label_bits").get<std::string>());
    if (label.n() != j.at("n").get<std::size_t>()) {
        throw DimensionError("label_bits length disagrees with n");
    }
    return {GhzLabel(label.n(), label.bits(), j.at("sign").get<int>()), j.at("phi").get<double>()};
}

Json to_json(const StateVector &state) {
    Json amps = Json::array();
    for (const auto &a : state.amplitudes()) amps.push_back(Json::array({a.real(), a.imag()}));
    return Json{{"n", state.n()}, {"amplitudes", std::move(amps)}};
}

StateVector state_vector_from_json(const Json &j) {
    std::vector<Complex> amps;
    for (const auto &pair : j.at("amplitudes")) {
        amps.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
    return StateVector(j.at("n").get<std::size_t>(), std::move(amps));
}

Json to_json(const QuarterTurns &turns) {
    return Json(std::vector<int>(turns.turns().begin(), turns.turns().end()));
}

Json to_json(const ProductObservable &obs) {
    return Json(std::vector<double>(obs.angles().begin(), obs.angles().end()));
}

Json pole_listing_json(std::size_t n, Pole pole, const std::vector<PoleOperator> &ops) {
    Json names = Json::array();
    for (const auto &op : ops) names.push_back(op.str());
    return Json{{"n", n}, {"pole", std::string(1, pole_char(pole))}, {"operators", std::move(names)},
                {"count", ops.size()}};
}

Json to_json(const ContradictionReport &report) {
    Json gens = Json::array();
    for (const auto &g : report.generators_used) gens.push_back(g.str());
    return Json{{"n", report.n},
                {"s_operator", report.s_operator.str()},
                {"lhv", report.lhv_value},
                {"quantum", report.quantum_value},
                {"generators", std::move(gens)}};
}

Json to_json(const CheckResult &check) {
    return Json{{"check", check.check}, {"residual", check.residual}, {"pass", check.pass}};
}

Json big_to_json(const BigInt &value) {
    if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
        return Json(value.convert_to<std::uint64_t>());
    }
    return Json(value.str());
}

Json to_json(const CountReport &row) {
    return Json{{"n", row.n},
                {"c_n", big_to_json(row.c_n)},
                {"compatible", big_to_json(row.compatible)},
                {"closed_form", big_to_json(row.closed_form_value)},
                {"binomial", big_to_json(row.binomial_value)}};
}

std::string count_csv(const std::vector<CountReport> &rows) {
    std::ostringstream out;
    out << "n,c_n,compatible,closed_form,binomial\n";
    for (const auto &r : rows) {
        out << r.n << ',' << r.c_n << ',' << r.compatible << ',' << r.closed_form_value << ',' << r.binomial_value
            << '\n';
    }
    return out.str();
}

std::string pole_listing_csv(const std::vector<PoleOperator> &ops) {
    std::ostringstream out;
    out << "index,operator,pole,y_count\n";
    std::size_t i = 0;
    for (const auto &op : ops) {
        out << i++ << ',' << op.str() << ',' << pole_char(op.pole()) << ',' << y_count(op.op()) << '\n';
    }
    return out.str();
}

}  // namespace ghz
