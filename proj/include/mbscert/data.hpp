// Generated reference data: interferometer unitaries, the 35 reference
// measurement matrices, the reference protocol strategy, and the reference
// probability tables, all transcribed at print precision. Regenerate with
// the repository data tooling rather than editing by hand.
#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

namespace mbscert::data {

namespace raw {

inline constexpr double kU4[] = {
    0.5, 0.5, 0.5, 0.5, 0.5, 0.5, -0.5, -0.5,
    0.5, -0.5, 0.5, -0.5, 0.5, -0.5, -0.5, 0.5,
};

inline constexpr double kU7Re[] = {
    0.5639, 0.201, 0.3019, 0.3749, 0.4918, 0.0905, 0.3998, 0.2222,
    -0.0065, -0.57, 0.3558, -0.1447, 0.2989, -0.1033, 0.3487, -0.6271,
    0.1178, -0.2245, -0.0469, 0.0629, -0.0116, 0.3929, 0.332, -0.162,
    -0.1267, -0.0489, -0.3319, -0.3447, 0.3709, -0.1842, -0.1199, -0.0224,
    0.0214, -0.0144, -0.3419, 0.1468, 0.3709, 0.3572, -0.0936, -0.5262,
    -0.279, 0.1351, 0.4444, -0.022, -0.0651, -0.3159, -0.3157, 0.0839,
    0.0989,
};
inline constexpr double kU7Im[] = {
    0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    0.1874, -0.306, -0.0865, 0.3632, -0.2884, -0.1635, 0.0, -0.3102,
    -0.0994, -0.2686, 0.1075, -0.2445, 0.4061, 0.0, 0.0156, -0.295,
    0.3353, -0.3414, -0.1445, 0.353, 0.0, 0.2868, 0.1069, -0.2699,
    -0.0533, 0.7223, -0.0698, 0.0, 0.2029, -0.0915, -0.4318, 0.3039,
    -0.0553, 0.0108, 0.0, -0.1704, 0.4328, 0.3254, -0.0201, -0.1206,
    -0.4943,
};

inline constexpr double kStatesRe[] = {
    0.507574, 0.662756, 0.1439, 0.530613, -0.0724881, -0.413325, 0.260956, 0.255838,
    -0.415261, 0.17193, -0.413262, 0.671584, 0.401067, -0.271274, 0.144303, 0.618532,
    0.118453, -0.0251893, -0.144825, 0.391649, -0.0518872, -0.672376, -0.361049, 0.173807,
    -0.473002, -0.056111, 0.211323, 0.651839,
};
inline constexpr double kStatesIm[] = {
    -0.0090103, -0.0213697, -0.0180914, 0.0, 0.498157, -0.382353, 0.544061, 0.0,
    0.380216, 0.110383, -0.139425, 0.0, -0.215166, 0.36049, 0.431162, 0.0,
    0.306095, 0.0382293, -0.846059, 0.0, -0.526847, 0.320233, -0.0673529, 0.0,
    -0.355323, -0.411596, 0.0889052, 0.0,
};
inline constexpr double kDichotomicRe[] = {
    0.508487, 0.662197, 0.151409, 0.527378, -0.0385109, -0.443409, 0.313894, 0.251527,
    -0.410518, 0.168252, -0.413796, 0.671331, 0.393413, -0.272517, 0.137073, 0.615203,
    0.131541, -0.0324357, -0.136997, 0.380908, -0.00356985, -0.692675, -0.367756, 0.179085,
    -0.461476, -0.0569732, 0.226916, 0.647083,
};
inline constexpr double kDichotomicIm[] = {
    -0.0150154, -0.0311996, -0.0261662, 0.0, 0.494678, -0.351319, 0.521516, 0.0,
    0.378204, 0.119914, -0.154393, 0.0, -0.230508, 0.365736, 0.432203, 0.0,
    0.30654, 0.0247376, -0.850416, 0.0, -0.523085, 0.269359, -0.0818537, 0.0,
    -0.36775, -0.4116, 0.0945078, 0.0,
};
inline constexpr double kPovmDirectionsRe[] = {
    0.505355, 0.662837, 0.122035, 0.538861, 0.448439, -0.505467, 0.589274, 0.0557004,
    -0.433774, 0.180038, -0.407489, 0.67233, 0.416467, -0.266418, 0.162878, 0.625676,
    -0.317427, -0.0632815, 0.85119, -0.0741812, -0.165596, 0.745866, 0.262609, -0.136976,
    -0.499761, -0.0553898, 0.176718, 0.661069,
};
inline constexpr double kPovmDirectionsIm[] = {
    0.0, 0.0, 0.0, 0.0, 0.262257, 0.228254, 0.0, -0.268665,
    0.384093, 0.0725377, -0.0925349, 0.0, -0.182098, 0.346772, 0.429146, 0.0,
    0.0327698, -0.0239012, 0.0, 0.404431, 0.516406, 0.0, 0.230115, -0.0943827,
    -0.322502, -0.411115, 0.0768536, 0.0,
};
inline constexpr double kBetas[] = {
    0.5505, 0.4969, 0.3651, 0.6219, 0.7204, 0.6638, 0.5814,
};

inline constexpr double kTheoryProj[] = {
    0.9998, 0.9721, 0.9029, 0.8411, 0.9402, 0.8105, 0.787, 0.973,
    0.9994, 0.8513, 0.7764, 0.8691, 0.9456, 0.8118, 0.9098, 0.857,
    0.9997, 0.984, 0.7333, 0.8951, 0.8292, 0.837, 0.7631, 0.9824,
    0.9996, 0.97, 0.8121, 0.9053, 0.9377, 0.8587, 0.7008, 0.9695,
    0.9994, 0.8805, 0.9151, 0.8014, 0.9412, 0.8821, 0.8079, 0.8798,
    0.9994, 0.9753, 0.7907, 0.809, 0.8195, 0.9094, 0.92, 0.9768,
    0.9995,
};
inline constexpr double kTheoryPovm[] = {
    0.5499, 0.4947, 0.3638, 0.6207, 0.7187, 0.662, 0.5799,
};
inline constexpr double kExperimentProj[] = {
    0.9937, 0.9722, 0.9022, 0.8409, 0.9402, 0.8105, 0.787, 0.9731,
    0.9958, 0.8523, 0.7762, 0.8692, 0.9454, 0.812, 0.9092, 0.8569,
    0.9934, 0.9841, 0.7345, 0.8952, 0.8302, 0.8372, 0.7638, 0.9825,
    0.997, 0.97, 0.8131, 0.9058, 0.9375, 0.8584, 0.7013, 0.9695,
    0.9941, 0.8806, 0.9153, 0.8011, 0.9414, 0.882, 0.808, 0.8803,
    0.9955, 0.9753, 0.7899, 0.8098, 0.8195, 0.9098, 0.9203, 0.9768,
    0.9951,
};
inline constexpr double kExperimentProjSigma[] = {
    0.0008, 0.0018, 0.0017, 0.0016, 0.0006, 0.0019, 0.0019, 0.0007,
    0.001, 0.004, 0.0009, 0.0021, 0.0012, 0.002, 0.0014, 0.0009,
    0.0012, 0.0004, 0.0048, 0.0013, 0.0018, 0.0021, 0.0014, 0.0006,
    0.0009, 0.0007, 0.0014, 0.0011, 0.0016, 0.0009, 0.0007, 0.0008,
    0.0012, 0.0023, 0.0011, 0.0014, 0.0009, 0.0013, 0.0007, 0.0023,
    0.0011, 0.0006, 0.0018, 0.0015, 0.0006, 0.0007, 0.001, 0.0004,
    0.0012,
};
inline constexpr double kExperimentPovm[] = {
    0.5495, 0.4912, 0.3637, 0.6206, 0.7152, 0.6623, 0.5814,
};
inline constexpr double kExperimentPovmSigma[] = {
    0.0035, 0.0043, 0.0029, 0.0035, 0.0036, 0.0035, 0.0033,
};

inline constexpr int kSubsetList[] = {
    1, 2, 3, 4, 1, 2, 3, 5, 1, 2, 3, 6, 1, 2, 3, 7,
    1, 2, 4, 5, 1, 2, 4, 6, 1, 2, 4, 7, 1, 2, 5, 6,
    1, 2, 5, 7, 1, 2, 6, 7, 1, 3, 4, 5, 1, 3, 4, 6,
    1, 3, 4, 7, 1, 3, 5, 6, 1, 3, 5, 7, 1, 3, 6, 7,
    1, 4, 5, 6, 1, 4, 5, 7, 1, 4, 6, 7, 1, 5, 6, 7,
    2, 3, 4, 5, 2, 3, 4, 6, 2, 3, 4, 7, 2, 3, 5, 6,
    2, 3, 5, 7, 2, 3, 6, 7, 2, 4, 5, 6, 2, 4, 5, 7,
    2, 4, 6, 7, 2, 5, 6, 7, 3, 4, 5, 6, 3, 4, 5, 7,
    3, 4, 6, 7, 3, 5, 6, 7, 4, 5, 6, 7,
};
inline constexpr double kPovmMatricesRe[] = {
    0.5639, 0.2222, 0.3487, 0.3929, 0.3709, 0.1468, 0.4444, 0.201,
    -0.006542, -0.6271, 0.332, -0.1842, 0.3709, -0.02196, 0.3019, -0.57,
    0.1178, -0.162, -0.1199, 0.3572, -0.0651, 0.3749, 0.3558, -0.2245,
    -0.1267, -0.02242, -0.09359, -0.3159, 0.5639, 0.2222, 0.3487, 0.3929,
    0.3709, 0.1468, 0.4444, 0.201, -0.006542, -0.6271, 0.332, -0.1842,
    0.3709, -0.02196, 0.3019, -0.57, 0.1178, -0.162, -0.1199, 0.3572,
    -0.0651, 0.4918, -0.1447, -0.04691, -0.04889, 0.02136, -0.5262, -0.3157,
    0.5639, 0.2222, 0.3487, 0.3929, 0.3709, 0.1468, 0.4444, 0.201,
    -0.006542, -0.6271, 0.332, -0.1842, 0.3709, -0.02196, 0.3019, -0.57,
    0.1178, -0.162, -0.1199, 0.3572, -0.0651, 0.09054, 0.2989, 0.06289,
    -0.3319, -0.01444, -0.279, 0.08389, 0.5639, 0.2222, 0.3487, 0.3929,
    0.3709, 0.1468, 0.4444, 0.201, -0.006542, -0.6271, 0.332, -0.1842,
    0.3709, -0.02196, 0.3019, -0.57, 0.1178, -0.162, -0.1199, 0.3572,
    -0.0651, 0.3998, -0.1033, -0.01155, -0.3447, -0.3419, 0.1351, 0.09887,
    0.5639, 0.2222, 0.3487, 0.3929, 0.3709, 0.1468, 0.4444, 0.201,
    -0.006542, -0.6271, 0.332, -0.1842, 0.3709, -0.02196, 0.3749, 0.3558,
    -0.2245, -0.1267, -0.02242, -0.09359, -0.3159, 0.4918, -0.1447, -0.04691,
    -0.04889, 0.02136, -0.5262, -0.3157, 0.5639, 0.2222, 0.3487, 0.3929,
    0.3709, 0.1468, 0.4444, 0.201, -0.006542, -0.6271, 0.332, -0.1842,
    0.3709, -0.02196, 0.3749, 0.3558, -0.2245, -0.1267, -0.02242, -0.09359,
    -0.3159, 0.09054, 0.2989, 0.06289, -0.3319, -0.01444, -0.279, 0.08389,
    0.5639, 0.2222, 0.3487, 0.3929, 0.3709, 0.1468, 0.4444, 0.201,
    -0.006542, -0.6271, 0.332, -0.1842, 0.3709, -0.02196, 0.3749, 0.3558,
    -0.2245, -0.1267, -0.02242, -0.09359, -0.3159, 0.3998, -0.1033, -0.01155,
    -0.3447, -0.3419, 0.1351, 0.09887, 0.5639, 0.2222, 0.3487, 0.3929,
    0.3709, 0.1468, 0.4444, 0.201, -0.006542, -0.6271, 0.332, -0.1842,
    0.3709, -0.02196, 0.4918, -0.1447, -0.04691, -0.04889, 0.02136, -0.5262,
    -0.3157, 0.09054, 0.2989, 0.06289, -0.3319, -0.01444, -0.279, 0.08389,
    0.5639, 0.2222, 0.3487, 0.3929, 0.3709, 0.1468, 0.4444, 0.201,
    -0.006542, -0.6271, 0.332, -0.1842, 0.3709, -0.02196, 0.4918, -0.1447,
    -0.04691, -0.04889, 0.02136, -0.5262, -0.3157, 0.3998, -0.1033, -0.01155,
    -0.3447, -0.3419, 0.1351, 0.09887, 0.5639, 0.2222, 0.3487, 0.3929,
    0.3709, 0.1468, 0.4444, 0.201, -0.006542, -0.6271, 0.332, -0.1842,
    0.3709, -0.02196, 0.09054, 0.2989, 0.06289, -0.3319, -0.01444, -0.279,
    0.08389, 0.3998, -0.1033, -0.01155, -0.3447, -0.3419, 0.1351, 0.09887,
    0.5639, 0.2222, 0.3487, 0.3929, 0.3709, 0.1468, 0.4444, 0.3019,
    -0.57, 0.1178, -0.162, -0.1199, 0.3572, -0.0651, 0.3749, 0.3558,
    -0.2245, -0.1267, -0.02242, -0.09359, -0.3159, 0.4918, -0.1447, -0.04691,
    -0.04889, 0.02136, -0.5262, -0.3157, 0.5639, 0.2222, 0.3487, 0.3929,
    0.3709, 0.1468, 0.4444, 0.3019, -0.57, 0.1178, -0.162, -0.1199,
    0.3572, -0.0651, 0.3749, 0.3558, -0.2245, -0.1267, -0.02242, -0.09359,
    -0.3159, 0.09054, 0.2989, 0.06289, -0.3319, -0.01444, -0.279, 0.08389,
    0.5639, 0.2222, 0.3487, 0.3929, 0.3709, 0.1468, 0.4444, 0.3019,
    -0.57, 0.1178, -0.162, -0.1199, 0.3572, -0.0651, 0.3749, 0.3558,
    -0.2245, -0.1267, -0.02242, -0.09359, -0.3159, 0.3998, -0.1033, -0.01155,
    -0.3447, -0.3419, 0.1351, 0.09887, 0.5639, 0.2222, 0.3487, 0.3929,
    0.3709, 0.1468, 0.4444, 0.3019, -0.57, 0.1178, -0.162, -0.1199,
    0.3572, -0.0651, 0.4918, -0.1447, -0.04691, -0.04889, 0.02136, -0.5262,
    -0.3157, 0.09054, 0.2989, 0.06289, -0.3319, -0.01444, -0.279, 0.08389,
    0.5639, 0.2222, 0.3487, 0.3929, 0.3709, 0.1468, 0.4444, 0.3019,
    -0.57, 0.1178, -0.162, -0.1199, 0.3572, -0.0651, 0.4918, -0.1447,
    -0.04691, -0.04889, 0.02136, -0.5262, -0.3157, 0.3998, -0.1033, -0.01155,
    -0.3447, -0.3419, 0.1351, 0.09887, 0.5639, 0.2222, 0.3487, 0.3929,
    0.3709, 0.1468, 0.4444, 0.3019, -0.57, 0.1178, -0.162, -0.1199,
    0.3572, -0.0651, 0.09054, 0.2989, 0.06289, -0.3319, -0.01444, -0.279,
    0.08389, 0.3998, -0.1033, -0.01155, -0.3447, -0.3419, 0.1351, 0.09887,
    0.5639, 0.2222, 0.3487, 0.3929, 0.3709, 0.1468, 0.4444, 0.3749,
    0.3558, -0.2245, -0.1267, -0.02242, -0.09359, -0.3159, 0.4918, -0.1447,
    -0.04691, -0.04889, 0.02136, -0.5262, -0.3157, 0.09054, 0.2989, 0.06289,
    -0.3319, -0.01444, -0.279, 0.08389, 0.5639, 0.2222, 0.3487, 0.3929,
    0.3709, 0.1468, 0.4444, 0.3749, 0.3558, -0.2245, -0.1267, -0.02242,
    -0.09359, -0.3159, 0.4918, -0.1447, -0.04691, -0.04889, 0.02136, -0.5262,
    -0.3157, 0.3998, -0.1033, -0.01155, -0.3447, -0.3419, 0.1351, 0.09887,
    0.5639, 0.2222, 0.3487, 0.3929, 0.3709, 0.1468, 0.4444, 0.3749,
    0.3558, -0.2245, -0.1267, -0.02242, -0.09359, -0.3159, 0.09054, 0.2989,
    0.06289, -0.3319, -0.01444, -0.279, 0.08389, 0.3998, -0.1033, -0.01155,
    -0.3447, -0.3419, 0.1351, 0.09887, 0.5639, 0.2222, 0.3487, 0.3929,
    0.3709, 0.1468, 0.4444, 0.4918, -0.1447, -0.04691, -0.04889, 0.02136,
    -0.5262, -0.3157, 0.09054, 0.2989, 0.06289, -0.3319, -0.01444, -0.279,
    0.08389, 0.3998, -0.1033, -0.01155, -0.3447, -0.3419, 0.1351, 0.09887,
    0.201, 0.1875, 0.6997, 0.3324, 0.3409, 0.4227, 0.1718, 0.3019,
    -0.2859, -0.0615, -0.1756, 0.1548, 0.2694, -0.4209, 0.3749, -0.09883,
    0.3204, -0.1108, -0.215, -0.2893, -0.2824, 0.4918, 0.368, -0.005624,
    -0.06483, -0.05638, -0.3158, 0.06025, 0.201, 0.1875, 0.6997, 0.3324,
    0.3409, 0.4227, 0.1718, 0.3019, -0.2859, -0.0615, -0.1756, 0.1548,
    0.2694, -0.4209, 0.3749, -0.09883, 0.3204, -0.1108, -0.215, -0.2893,
    -0.2824, 0.09054, -0.2987, 0.05206, -0.3383, 0.6156, -0.2714, 0.1089,
    0.201, 0.1875, 0.6997, 0.3324, 0.3409, 0.4227, 0.1718, 0.3019,
    -0.2859, -0.0615, -0.1756, 0.1548, 0.2694, -0.4209, 0.3749, -0.09883,
    0.3204, -0.1108, -0.215, -0.2893, -0.2824, 0.3998, -0.1598, -0.1697,
    -0.3278, 0.1261, 0.1237, 0.4776, 0.201, 0.1875, 0.6997, 0.3324,
    0.3409, 0.4227, 0.1718, 0.3019, -0.2859, -0.0615, -0.1756, 0.1548,
    0.2694, -0.4209, 0.4918, 0.368, -0.005624, -0.06483, -0.05638, -0.3158,
    0.06025, 0.09054, -0.2987, 0.05206, -0.3383, 0.6156, -0.2714, 0.1089,
    0.201, 0.1875, 0.6997, 0.3324, 0.3409, 0.4227, 0.1718, 0.3019,
    -0.2859, -0.0615, -0.1756, 0.1548, 0.2694, -0.4209, 0.4918, 0.368,
    -0.005624, -0.06483, -0.05638, -0.3158, 0.06025, 0.3998, -0.1598, -0.1697,
    -0.3278, 0.1261, 0.1237, 0.4776, 0.201, 0.1875, 0.6997, 0.3324,
    0.3409, 0.4227, 0.1718, 0.3019, -0.2859, -0.0615, -0.1756, 0.1548,
    0.2694, -0.4209, 0.09054, -0.2987, 0.05206, -0.3383, 0.6156, -0.2714,
    0.1089, 0.3998, -0.1598, -0.1697, -0.3278, 0.1261, 0.1237, 0.4776,
    0.201, 0.1875, 0.6997, 0.3324, 0.3409, 0.4227, 0.1718, 0.3749,
    -0.09883, 0.3204, -0.1108, -0.215, -0.2893, -0.2824, 0.4918, 0.368,
    -0.005624, -0.06483, -0.05638, -0.3158, 0.06025, 0.09054, -0.2987, 0.05206,
    -0.3383, 0.6156, -0.2714, 0.1089, 0.201, 0.1875, 0.6997, 0.3324,
    0.3409, 0.4227, 0.1718, 0.3749, -0.09883, 0.3204, -0.1108, -0.215,
    -0.2893, -0.2824, 0.4918, 0.368, -0.005624, -0.06483, -0.05638, -0.3158,
    0.06025, 0.3998, -0.1598, -0.1697, -0.3278, 0.1261, 0.1237, 0.4776,
    0.201, 0.1875, 0.6997, 0.3324, 0.3409, 0.4227, 0.1718, 0.3749,
    -0.09883, 0.3204, -0.1108, -0.215, -0.2893, -0.2824, 0.09054, -0.2987,
    0.05206, -0.3383, 0.6156, -0.2714, 0.1089, 0.3998, -0.1598, -0.1697,
    -0.3278, 0.1261, 0.1237, 0.4776, 0.201, 0.1875, 0.6997, 0.3324,
    0.3409, 0.4227, 0.1718, 0.4918, 0.368, -0.005624, -0.06483, -0.05638,
    -0.3158, 0.06025, 0.09054, -0.2987, 0.05206, -0.3383, 0.6156, -0.2714,
    0.1089, 0.3998, -0.1598, -0.1697, -0.3278, 0.1261, 0.1237, 0.4776,
    0.3019, 0.647, 0.1542, 0.3365, 0.1607, 0.3687, 0.4377, 0.3749,
    -0.2726, 0.001653, -0.2329, -0.1629, 0.01653, 0.3688, 0.4918, -0.0443,
    -0.1052, 0.3228, -0.05141, -0.5852, 0.02711, 0.09054, -0.1269, 0.2058,
    0.2864, 0.4915, -0.2566, -0.1318, 0.3019, 0.647, 0.1542, 0.3365,
    0.1607, 0.3687, 0.4377, 0.3749, -0.2726, 0.001653, -0.2329, -0.1629,
    0.01653, 0.3688, 0.4918, -0.0443, -0.1052, 0.3228, -0.05141, -0.5852,
    0.02711, 0.3998, 0.1683, -0.2707, -0.1435, 0.2088, 0.1282, -0.5035,
    0.3019, 0.647, 0.1542, 0.3365, 0.1607, 0.3687, 0.4377, 0.3749,
    -0.2726, 0.001653, -0.2329, -0.1629, 0.01653, 0.3688, 0.09054, -0.1269,
    0.2058, 0.2864, 0.4915, -0.2566, -0.1318, 0.3998, 0.1683, -0.2707,
    -0.1435, 0.2088, 0.1282, -0.5035, 0.3019, 0.647, 0.1542, 0.3365,
    0.1607, 0.3687, 0.4377, 0.4918, -0.0443, -0.1052, 0.3228, -0.05141,
    -0.5852, 0.02711, 0.09054, -0.1269, 0.2058, 0.2864, 0.4915, -0.2566,
    -0.1318, 0.3998, 0.1683, -0.2707, -0.1435, 0.2088, 0.1282, -0.5035,
    0.3749, 0.3662, 0.3501, 0.3584, 0.2709, 0.4418, 0.4535, 0.4918,
    -0.2263, -0.05239, -0.3021, 0.05134, -0.1856, 0.2055, 0.09054, 0.3586,
    0.1473, -0.01789, -0.7187, 0.1132, -0.145, 0.3998, -0.06171, -0.3041,
    0.4521, 0.09788, -0.03915, -0.4235,
};
inline constexpr double kPovmMatricesIm[] = {
    0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    -0.1874, 0.3102, -0.01557, -0.2868, -0.2029, 0.1704, 0.0, 0.306,
    0.09943, 0.295, -0.1069, 0.09154, -0.4328, 0.0, 0.08647, 0.2686,
    -0.3353, 0.2699, 0.4318, -0.3254, 0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0, -0.1874, 0.3102, -0.01557, -0.2868,
    -0.2029, 0.1704, 0.0, 0.306, 0.09943, 0.295, -0.1069, 0.09154,
    -0.4328, 0.0, -0.3632, -0.1075, 0.3414, 0.0533, -0.3039, 0.02007,
    0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    -0.1874, 0.3102, -0.01557, -0.2868, -0.2029, 0.1704, 0.0, 0.306,
    0.09943, 0.295, -0.1069, 0.09154, -0.4328, 0.0, 0.2884, 0.2445,
    0.1445, -0.7223, 0.05535, 0.1206, 0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0, -0.1874, 0.3102, -0.01557, -0.2868,
    -0.2029, 0.1704, 0.0, 0.306, 0.09943, 0.295, -0.1069, 0.09154,
    -0.4328, 0.0, 0.1635, -0.4061, -0.353, 0.06981, -0.01077, 0.4943,
    0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    -0.1874, 0.3102, -0.01557, -0.2868, -0.2029, 0.1704, 0.0, 0.08647,
    0.2686, -0.3353, 0.2699, 0.4318, -0.3254, 0.0, -0.3632, -0.1075,
    0.3414, 0.0533, -0.3039, 0.02007, 0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0, -0.1874, 0.3102, -0.01557, -0.2868,
    -0.2029, 0.1704, 0.0, 0.08647, 0.2686, -0.3353, 0.2699, 0.4318,
    -0.3254, 0.0, 0.2884, 0.2445, 0.1445, -0.7223, 0.05535, 0.1206,
    0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    -0.1874, 0.3102, -0.01557, -0.2868, -0.2029, 0.1704, 0.0, 0.08647,
    0.2686, -0.3353, 0.2699, 0.4318, -0.3254, 0.0, 0.1635, -0.4061,
    -0.353, 0.06981, -0.01077, 0.4943, 0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0, -0.1874, 0.3102, -0.01557, -0.2868,
    -0.2029, 0.1704, 0.0, -0.3632, -0.1075, 0.3414, 0.0533, -0.3039,
    0.02007, 0.0, 0.2884, 0.2445, 0.1445, -0.7223, 0.05535, 0.1206,
    0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    -0.1874, 0.3102, -0.01557, -0.2868, -0.2029, 0.1704, 0.0, -0.3632,
    -0.1075, 0.3414, 0.0533, -0.3039, 0.02007, 0.0, 0.1635, -0.4061,
    -0.353, 0.06981, -0.01077, 0.4943, 0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0, -0.1874, 0.3102, -0.01557, -0.2868,
    -0.2029, 0.1704, 0.0, 0.2884, 0.2445, 0.1445, -0.7223, 0.05535,
    0.1206, 0.0, 0.1635, -0.4061, -0.353, 0.06981, -0.01077, 0.4943,
    0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    0.306, 0.09943, 0.295, -0.1069, 0.09154, -0.4328, 0.0, 0.08647,
    0.2686, -0.3353, 0.2699, 0.4318, -0.3254, 0.0, -0.3632, -0.1075,
    0.3414, 0.0533, -0.3039, 0.02007, 0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0, 0.306, 0.09943, 0.295, -0.1069,
    0.09154, -0.4328, 0.0, 0.08647, 0.2686, -0.3353, 0.2699, 0.4318,
    -0.3254, 0.0, 0.2884, 0.2445, 0.1445, -0.7223, 0.05535, 0.1206,
    0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    0.306, 0.09943, 0.295, -0.1069, 0.09154, -0.4328, 0.0, 0.08647,
    0.2686, -0.3353, 0.2699, 0.4318, -0.3254, 0.0, 0.1635, -0.4061,
    -0.353, 0.06981, -0.01077, 0.4943, 0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0, 0.306, 0.09943, 0.295, -0.1069,
    0.09154, -0.4328, 0.0, -0.3632, -0.1075, 0.3414, 0.0533, -0.3039,
    0.02007, 0.0, 0.2884, 0.2445, 0.1445, -0.7223, 0.05535, 0.1206,
    0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    0.306, 0.09943, 0.295, -0.1069, 0.09154, -0.4328, 0.0, -0.3632,
    -0.1075, 0.3414, 0.0533, -0.3039, 0.02007, 0.0, 0.1635, -0.4061,
    -0.353, 0.06981, -0.01077, 0.4943, 0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0, 0.306, 0.09943, 0.295, -0.1069,
    0.09154, -0.4328, 0.0, 0.2884, 0.2445, 0.1445, -0.7223, 0.05535,
    0.1206, 0.0, 0.1635, -0.4061, -0.353, 0.06981, -0.01077, 0.4943,
    0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    0.08647, 0.2686, -0.3353, 0.2699, 0.4318, -0.3254, 0.0, -0.3632,
    -0.1075, 0.3414, 0.0533, -0.3039, 0.02007, 0.0, 0.2884, 0.2445,
    0.1445, -0.7223, 0.05535, 0.1206, 0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0, 0.08647, 0.2686, -0.3353, 0.2699,
    0.4318, -0.3254, 0.0, -0.3632, -0.1075, 0.3414, 0.0533, -0.3039,
    0.02007, 0.0, 0.1635, -0.4061, -0.353, 0.06981, -0.01077, 0.4943,
    0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    0.08647, 0.2686, -0.3353, 0.2699, 0.4318, -0.3254, 0.0, 0.2884,
    0.2445, 0.1445, -0.7223, 0.05535, 0.1206, 0.0, 0.1635, -0.4061,
    -0.353, 0.06981, -0.01077, 0.4943, 0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0, -0.3632, -0.1075, 0.3414, 0.0533,
    -0.3039, 0.02007, 0.0, 0.2884, 0.2445, 0.1445, -0.7223, 0.05535,
    0.1206, 0.0, 0.1635, -0.4061, -0.353, 0.06981, -0.01077, 0.4943,
    0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    -0.5804, -0.1414, 0.2871, -0.04311, 0.2517, 0.1199, 0.0, 0.3526,
    -0.1412, -0.3409, -0.1647, 0.3339, 0.3549, 0.0, -0.1319, 0.1171,
    0.3387, -0.01083, -0.5192, 0.3105, 0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0, -0.5804, -0.1414, 0.2871, -0.04311,
    0.2517, 0.1199, 0.0, 0.3526, -0.1412, -0.3409, -0.1647, 0.3339,
    0.3549, 0.0, 0.2887, -0.2471, 0.1288, 0.3782, -0.08536, -0.09863,
    0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    -0.5804, -0.1414, 0.2871, -0.04311, 0.2517, 0.1199, 0.0, 0.3526,
    -0.1412, -0.3409, -0.1647, 0.3339, 0.3549, 0.0, -0.1089, 0.3691,
    -0.3688, -0.3254, 0.05538, -0.1612, 0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0, -0.5804, -0.1414, 0.2871, -0.04311,
    0.2517, 0.1199, 0.0, -0.1319, 0.1171, 0.3387, -0.01083, -0.5192,
    0.3105, 0.0, 0.2887, -0.2471, 0.1288, 0.3782, -0.08536, -0.09863,
    0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    -0.5804, -0.1414, 0.2871, -0.04311, 0.2517, 0.1199, 0.0, -0.1319,
    0.1171, 0.3387, -0.01083, -0.5192, 0.3105, 0.0, -0.1089, 0.3691,
    -0.3688, -0.3254, 0.05538, -0.1612, 0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0, -0.5804, -0.1414, 0.2871, -0.04311,
    0.2517, 0.1199, 0.0, 0.2887, -0.2471, 0.1288, 0.3782, -0.08536,
    -0.09863, 0.0, -0.1089, 0.3691, -0.3688, -0.3254, 0.05538, -0.1612,
    0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    0.3526, -0.1412, -0.3409, -0.1647, 0.3339, 0.3549, 0.0, -0.1319,
    0.1171, 0.3387, -0.01083, -0.5192, 0.3105, 0.0, 0.2887, -0.2471,
    0.1288, 0.3782, -0.08536, -0.09863, 0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0, 0.3526, -0.1412, -0.3409, -0.1647,
    0.3339, 0.3549, 0.0, -0.1319, 0.1171, 0.3387, -0.01083, -0.5192,
    0.3105, 0.0, -0.1089, 0.3691, -0.3688, -0.3254, 0.05538, -0.1612,
    0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    0.3526, -0.1412, -0.3409, -0.1647, 0.3339, 0.3549, 0.0, 0.2887,
    -0.2471, 0.1288, 0.3782, -0.08536, -0.09863, 0.0, -0.1089, 0.3691,
    -0.3688, -0.3254, 0.05538, -0.1612, 0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0, -0.1319, 0.1171, 0.3387, -0.01083,
    -0.5192, 0.3105, 0.0, 0.2887, -0.2471, 0.1288, 0.3782, -0.08536,
    -0.09863, 0.0, -0.1089, 0.3691, -0.3688, -0.3254, 0.05538, -0.1612,
    0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    -0.2445, 0.3501, 0.2725, -0.2164, 0.4415, -0.264, 0.0, 0.3884,
    -0.05189, -0.1215, -0.02556, -0.1638, -0.3152, 0.0, -0.3955, 0.1463,
    0.2213, 0.5295, 0.1229, 0.06502, 0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0, -0.2445, 0.3501, 0.2725, -0.2164,
    0.4415, -0.264, 0.0, 0.3884, -0.05189, -0.1215, -0.02556, -0.1638,
    -0.3152, 0.0, -0.09526, -0.3029, 0.4721, -0.2797, -0.04397, 0.02425,
    0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    -0.2445, 0.3501, 0.2725, -0.2164, 0.4415, -0.264, 0.0, -0.3955,
    0.1463, 0.2213, 0.5295, 0.1229, 0.06502, 0.0, -0.09526, -0.3029,
    0.4721, -0.2797, -0.04397, 0.02425, 0.0, 0.0, 0.0, 0.0,
    0.0, 0.0, 0.0, 0.0, 0.3884, -0.05189, -0.1215, -0.02556,
    -0.1638, -0.3152, 0.0, -0.3955, 0.1463, 0.2213, 0.5295, 0.1229,
    0.06502, 0.0, -0.09526, -0.3029, 0.4721, -0.2797, -0.04397, 0.02425,
    0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    -0.3188, 0.1049, -0.1664, -0.02569, 0.5787, -0.2405, 0.0, 0.2097,
    -0.2051, -0.3615, 0.07419, 0.261, -0.02382, 0.0, 0.1833, 0.2693,
    -0.1977, 0.335, -0.1297, -0.2733,
};

}  // namespace raw

using Cplx = std::complex<double>;

inline Eigen::MatrixXcd u4() {
    Eigen::MatrixXcd m(4, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = raw::kU4[4 * r + c];
    return m;
}

inline Eigen::MatrixXcd u7() {
    Eigen::MatrixXcd m(7, 7);
    for (int r = 0; r < 7; ++r)
        for (int c = 0; c < 7; ++c)
            m(r, c) = Cplx(raw::kU7Re[7 * r + c], raw::kU7Im[7 * r + c]);
    return m;
}

// printed 4x7 element matrices: column b is the unnormalized element vector
inline Eigen::MatrixXcd element_matrix(int index) {
    Eigen::MatrixXcd m(4, 7);
    const double* re = raw::kPovmMatricesRe + 28 * index;
    const double* im = raw::kPovmMatricesIm + 28 * index;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 7; ++c) m(r, c) = Cplx(re[7 * r + c], im[7 * r + c]);
    return m;
}

inline std::array<int, 4> subset(int index) {
    return {raw::kSubsetList[4 * index], raw::kSubsetList[4 * index + 1],
            raw::kSubsetList[4 * index + 2], raw::kSubsetList[4 * index + 3]};
}

inline constexpr int kNumReferencePovms = 35;
inline constexpr int kIndexM4567 = 34;  // subset (4,5,6,7) is last in lexicographic order

inline Eigen::MatrixXcd m4567() { return element_matrix(kIndexM4567); }

inline Eigen::VectorXcd state_bra_row(int x) {  // printed row, unnormalized
    Eigen::VectorXcd v(4);
    for (int c = 0; c < 4; ++c)
        v(c) = Cplx(raw::kStatesRe[4 * x + c], raw::kStatesIm[4 * x + c]);
    return v;
}

inline Eigen::VectorXcd dichotomic_bra_row(int y) {
    Eigen::VectorXcd v(4);
    for (int c = 0; c < 4; ++c)
        v(c) = Cplx(raw::kDichotomicRe[4 * y + c], raw::kDichotomicIm[4 * y + c]);
    return v;
}

inline Eigen::VectorXcd povm_direction_row(int b) {
    Eigen::VectorXcd v(4);
    for (int c = 0; c < 4; ++c)
        v(c) = Cplx(raw::kPovmDirectionsRe[4 * b + c], raw::kPovmDirectionsIm[4 * b + c]);
    return v;
}

inline Eigen::VectorXd betas() {
    Eigen::VectorXd v(7);
    for (int b = 0; b < 7; ++b) v(b) = raw::kBetas[b];
    return v;
}

struct Tables {
    Eigen::MatrixXd proj;        // 7x7, entry (x,y) = p(b = delta_xy | x,y)
    Eigen::VectorXd povm;        // length 7, p(b'=x | x)
    Eigen::MatrixXd proj_sigma;  // zero for theory
    Eigen::VectorXd povm_sigma;
    bool has_sigma = false;
};

inline Tables theory_tables() {
    Tables t;
    t.proj.resize(7, 7);
    t.povm.resize(7);
    t.proj_sigma = Eigen::MatrixXd::Zero(7, 7);
    t.povm_sigma = Eigen::VectorXd::Zero(7);
    for (int x = 0; x < 7; ++x) {
        for (int y = 0; y < 7; ++y) t.proj(x, y) = raw::kTheoryProj[7 * x + y];
        t.povm(x) = raw::kTheoryPovm[x];
    }
    return t;
}

inline Tables experiment_tables() {
    Tables t;
    t.proj.resize(7, 7);
    t.povm.resize(7);
    t.proj_sigma.resize(7, 7);
    t.povm_sigma.resize(7);
    t.has_sigma = true;
    for (int x = 0; x < 7; ++x) {
        for (int y = 0; y < 7; ++y) {
            t.proj(x, y) = raw::kExperimentProj[7 * x + y];
            t.proj_sigma(x, y) = raw::kExperimentProjSigma[7 * x + y];
        }
        t.povm(x) = raw::kExperimentPovm[x];
        t.povm_sigma(x) = raw::kExperimentPovmSigma[x];
    }
    return t;
}

}  // namespace mbscert::data
