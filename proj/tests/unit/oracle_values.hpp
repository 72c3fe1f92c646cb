#pragma once

// Generated by tests/oracles/generate.py; do not edit by hand.

namespace oracle {

struct MlPoint {
  double beta, x, value;
};
inline constexpr MlPoint kMittagLeffler[] = {
    {0.3, -0.5, 0.63264900594359902246},
    {0.3, -1.5, 0.35538165657360314675},
    {0.3, -3.0, 0.21180263319643578203},
    {0.3, -200.0, 0.0038406585600538580520},
    {0.5, -1.0, 0.42758357615580700441},
    {0.5, -4.0, 0.13699945762506138989},
    {0.5, -15.0, 0.037529606388505765746},
    {0.5, -1000.0, 0.00056418930145338765420},
    {0.8, -2.0, 0.18979669236370564843},
    {0.8, -8.0, 0.032273828446835791389},
    {0.8, -40.0, 0.0056207330638633669789},
    {0.8, -10000.0, 0.000021785193742450023945},
};
inline constexpr double kMlHalfMinusOne = 0.42758357615580700441;
inline constexpr double kLevyTailAt4 = 0.27632639016823693299;
inline constexpr double kCauchyTailAt10 = 0.063451034861107139030;
inline constexpr double kBmSurvivalMid02 = 0.97399107522607635104;
inline constexpr double kQStablePiT1 = 0.93683222222224811417;
inline constexpr double kQStablePiT02 = 2.1323399669651664743;
inline constexpr double kQSubordStablePiT10 = 0.00011560997183006580691;
inline constexpr double kWeightedExpHalfPi = 1.5476612247191200023;
inline constexpr double kQTimeChangedPiT1 = 1.1098110187091572159;
inline constexpr double kLargeTimeConstantPiHalf = 1.4577848606354052372;
inline constexpr double kFracPerimeterHalfUnit = 1.5957691216057307118;
inline constexpr double kFracPerimeterQuarterPi = 2.7790860851861981557;
inline constexpr double kFracPerimeterThreeQuarterUnit = 2.8829642414942502674;
inline constexpr double kSupConstant15 = 1.2790989301142911573;
inline constexpr double kSupConstant2 = 1.1283791670955125739;
inline constexpr double kXlogHalfT1em6 = 0.0073380933755206968777;
inline constexpr double kXlogThirdT1em3 = 0.22426927698454816191;
inline constexpr double kVHalfT1 = 0.34884433047647657699;
inline constexpr double kVHalfT1em4 = 0.047399043261215324710;

}  // namespace oracle
