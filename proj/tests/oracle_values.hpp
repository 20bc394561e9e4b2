#pragma once

// Expected values computed by tests/oracles/derive_oracles.py (mpmath
// quadrature at 30 digits). Frozen: do not regenerate from the C++ code.

namespace oracle {

inline constexpr double kGaussNorm = 0.84089641525371454;
inline constexpr double kGaussSpreadX = 0.079577471545947668;
inline constexpr double kGaussSpreadW = 0.079577471545947668;
inline constexpr double kChirpSpreadW = 0.15915494309189534;
inline constexpr double kChirpD2SpreadW = 0.39788735772973834;
inline constexpr double kChirpCov = 0.079577471545947668;
inline constexpr double kSgnChirpCov = 0.0;
inline constexpr double kSgnChirpCenterW = 0.22507907903927652;
inline constexpr double kSgnChirpCentralAbsCov = 0.038714901075569366;
inline constexpr double kSgnChirpCentralSpreadW = 0.10849435127072645;
inline constexpr double kSgnChirpCentralProduct = 0.0086337061511422853;
inline constexpr double kGaussProduct = 0.0063325739776461107;
inline constexpr double kChirpProduct = 0.012665147955292221;
inline constexpr double kBoundReal = 0.0063325739776461107;
inline constexpr double kWignerGaussOrigin = 1.414213562373095;
inline constexpr double kWignerSpreadX = 0.039788735772973834;
inline constexpr double kT1Bound = 0.0015831434944115277;
inline constexpr double kT3Bound = 0.004749430483234583;
inline constexpr double kT2Product = 0.0031662869888230554;
inline constexpr double kT4Bound = 0.0023747152416172915;
inline constexpr double kHermiteSpreadX = 0.238732414637843;
inline constexpr double kHermiteSpreadW = 0.238732414637843;
inline constexpr double kFlandrinGaussT05 = 0.33820425407027759;
inline constexpr double kFlandrinGaussT1 = 0.15915494309189534;
inline constexpr double kFlandrinGaussT2 = 0.33820425407027759;

// Published six-digit values, checked against the oracles above.
inline constexpr double kQuotedBoundReal = 6.33257e-3;
inline constexpr double kQuotedT1Bound = 1.58314e-3;
inline constexpr double kQuotedWignerSpreadX = 0.0397887;
inline constexpr double kQuotedFlandrinT1 = 0.159155;

}  // namespace oracle
