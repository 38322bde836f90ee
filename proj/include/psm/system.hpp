#pragma once

#include <vector>

#include "psm/linalg.hpp"

namespace psm {

/// Scalar parameters of the secure PSM link.
struct SystemConfig {
    int na = 6; ///< transmit antennas at Alice
    int nb = 5; ///< receive antennas at Bob
    int ne = 2; ///< receive antennas at Eve
    int nt = 4; ///< selected receive antennas (power of two, <= nb, <= na)
    int mod_order = 4;
    double ps = 1.0;   ///< total transmit power (linear)
    double rho1 = 0.5; ///< useful-signal power fraction; AN gets rho2 = 1 - rho1
    double sigma_b_sq = 1.0;
    double sigma_e_sq = 1.0;

    double rho2() const { return 1.0 - rho1; }
};

/// Largest power of two not exceeding nb.
int derive_nt(int nb);

/// Throws InvalidDimensions when a field violates its constraints.
void validate(const SystemConfig& cfg);

enum class ApmFamily { Psk, SquareQam };

struct Constellation {
    std::vector<Complex> symbols;

    int order() const { return static_cast<int>(symbols.size()); }
};

/// Multiset of pairwise transmit-vector squared distances d_j with their
/// probability masses f_j, in strictly increasing d order.
struct DistanceSpectrum {
    struct Entry {
        double d;
        double f;
    };
    std::vector<Entry> entries;

    int size() const { return static_cast<int>(entries.size()); }
};

/// One of the K = C(nb, nt) receive-antenna subsets.
struct SelectionPattern {
    int k = 0;                ///< 1-based rank in lexicographic enumeration
    std::vector<int> indices; ///< 1-based antenna indices, strictly increasing
};

struct ChannelPair {
    CMatrix h; ///< nb x na, Alice to Bob
    CMatrix g; ///< ne x na, Alice to Eve
};

/// Unit-average-energy constellation. PSK places points at angles 2*pi*m/M
/// (anchored at pi/4 for M = 4); square QAM requires M to be a perfect
/// square. Throws UnsupportedOrder.
Constellation build_constellation(int order, ApmFamily family);

DistanceSpectrum distance_spectrum(const Constellation& c, int nt);

/// All C(nb, nt) patterns in lexicographic order of their index lists.
std::vector<SelectionPattern> enumerate_patterns(int nb, int nt);

/// H and G with i.i.d. CN(0, 1) entries; H is drawn before G.
ChannelPair generate_channels(const SystemConfig& cfg, RngStream& rng);

/// Sub-channel H_k: the rows of h named by the pattern, in pattern order.
CMatrix select_rows(const CMatrix& h, const SelectionPattern& p);

} // namespace psm
