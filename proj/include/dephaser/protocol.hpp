// protocol.hpp — the two-use entanglement-sharing scheme: CNOT-encode one
// member of a Bell pair onto an ancilla, transmit both through the correlated
// channel, CNOT-decode, discard the ancilla.

#pragma once

#include "dephaser/bath.hpp"
#include "dephaser/matrix.hpp"

namespace dephaser::protocol {

enum class BellLabel { phi_plus, phi_minus, psi_plus, psi_minus };

PureState bell_state(BellLabel label);

// Ancilla preparation.  `one` places the encoded pair in the subspace
// protected under memory (coherence factor h-); `zero` is the negative
// control, landing in the anti-protected subspace (factor h+).
enum class AncillaInit { one, zero };

struct ProtocolResult {
    DensityMatrix final_rq;     // decoded two-qubit state
    DensityMatrix ancilla_out;  // reduced ancilla state after decoding
    double fidelity;            // against the transmitted Bell state
    bool disentangled;          // RQ (x) A factorizes to 1e-10
};

// Qubit order R (x) Q (x) A; CNOT control Q, target A.
ProtocolResult run_protocol(BellLabel bell, const bath::DephasingParams& params,
                            AncillaInit ancilla = AncillaInit::one);

// (1+g)/2: entanglement fidelity of sending one Bell member through a
// single use, the baseline the coded scheme competes with.
double uncoded_baseline(const bath::DephasingParams& params);

struct AdvantageReport {
    double coded;
    double uncoded;
    bool advantageous;  // coded >= uncoded
};

AdvantageReport protocol_advantage(const bath::DephasingParams& params);

}  // namespace dephaser::protocol
