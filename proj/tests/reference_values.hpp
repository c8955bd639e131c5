#ifndef CRANESITE_TESTS_REFERENCE_VALUES_HPP_
#define CRANESITE_TESTS_REFERENCE_VALUES_HPP_

// Values pinned by tests/reference/hand_calc.py, an independent scalar
// evaluation of the travel-time model on data/example_site.json.

#include <filesystem>

namespace cranesite::testing {

inline const std::filesystem::path kSiteFile =
    std::filesystem::path(CRANESITE_DATA_DIR) / "example_site.json";

// Supply 2, demand 1, crane position 8.
inline constexpr double kRhoDemand = 37.64306044943742;
inline constexpr double kRhoSupply = 24.698178070456937;
inline constexpr double kChord = 50.00999900019995;
inline constexpr double kRadialTime = 0.24286833731670704;
inline constexpr double kSlewTime = 0.24155323829943823;
inline constexpr double kHorizontalTime = 0.3032566468915666;
inline constexpr double kVerticalTime = 0.21666666666666667;
inline constexpr double kTotalTime = 0.5199233135582333;

// Supply 5 to demand 1.
inline constexpr double kChordSupply5Demand1 = 38.27531841800928;

inline constexpr double kHomogeneousK8 = 504.76309062113194;   // (2,5,1)
inline constexpr double kHomogeneousK2 = 540.7587182327924;    // (3,2,9)
inline constexpr double kAssignmentK9 = 453.4592100304054;     // (3,7,4,4,3,2,1,1,3)
inline constexpr double kAssignmentK8 = 437.9774220639604;     // (7,7,6,4,3,2,1,1,1)
inline constexpr double kSizedK2 = 388.204562548074;           // (7,6,5,4,3,2,1,9,8)
inline constexpr double kPerSupplyK8 = 356.6403450361966;      // supply i -> demand a_i
inline constexpr double kUnboundedOptimum = 354.4667187946085;  // crane 2

// Published costs.
inline constexpr double kPublishedHomogeneous = 504.7631;
inline constexpr double kPublishedHomogeneousGa = 540.7587;
inline constexpr double kPublishedUnboundedMilp = 343.3390;
inline constexpr double kPublishedUnboundedMetaheuristic = 356.6403;
inline constexpr double kPublishedSized = 388.2046;

}  // namespace cranesite::testing

#endif  // CRANESITE_TESTS_REFERENCE_VALUES_HPP_
