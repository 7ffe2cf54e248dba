#pragma once

// JSON and CSV encodings shared by the CLI and by consumers of its output.

#include <string>
#include <vector>

#include "json.hpp"

#include "ghz/counting.h"
#include "ghz/ghz_states.h"
#include "ghz/lhv.h"
#include "ghz/oracle.h"
#include "ghz/pauli.h"
#include "ghz/poles.h"
#include "ghz/rotations.h"

namespace ghz {

/// Insertion-ordered so output is byte-stable and keys appear in documented order.
using Json = nlohmann::ordered_json;

/// {"text": "-YYY", "phase": 2}
Json to_json(const PauliOperator &op);
PauliOperator pauli_from_json(const Json &j);

/// {"n", "label_bits", "sign", "phi"}
Json to_json(const RotatedState &state);
RotatedState rotated_state_from_json(const Json &j);

/// {"n", "amplitudes": [[re, im], ...]}
Json to_json(const StateVector &state);
StateVector state_vector_from_json(const Json &j);

Json to_json(const QuarterTurns &turns);
Json to_json(const ProductObservable &obs);

/// {"n":3, "pole":"S", "operators":["YYY"], "count":1}
Json pole_listing_json(std::size_t n, Pole pole, const std::vector<PoleOperator> &ops);

/// {"n":3, "s_operator":"YYY", "lhv":1, "quantum":-1, "generators":["YXX","XYX","XXY"]}
Json to_json(const ContradictionReport &report);

/// {"check": ..., "residual": ..., "pass": ...}
Json to_json(const CheckResult &check);

/// Exact integers become JSON numbers when they fit in 64 bits, decimal strings otherwise.
Json big_to_json(const BigInt &value);
Json to_json(const CountReport &row);

/// Header "n,c_n,compatible,closed_form,binomial" then one line per row.
std::string count_csv(const std::vector<CountReport> &rows);
/// Header "index,operator,pole,y_count" then one line per operator.
std::string pole_listing_csv(const std::vector<PoleOperator> &ops);

}  // namespace ghz
