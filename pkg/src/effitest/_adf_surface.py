"""Simulated Dickey-Fuller tau null quantiles.

Generated by scripts/gen_adf_surface.py: do not edit by hand.
"""

P_LEVELS = [0.01, 0.025, 0.05, 0.075, 0.1, 0.15, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.975, 0.99]

SAMPLE_SIZES = [25, 50, 100, 250, 500, 1000, 2500, 10000]

QUANTILES = {
    'none': [
        [-2.6612, -2.2657, -1.9509, -1.7527, -1.6049, -1.3835, -1.2114, -0.9378, -0.7052, -0.4711, -0.2106, 0.0846, 0.4356, 0.9272, 1.3285, 1.6908, 2.1400],
        [-2.6079, -2.2522, -1.9522, -1.7599, -1.6170, -1.3953, -1.2246, -0.9492, -0.7154, -0.4825, -0.2234, 0.0697, 0.4182, 0.9035, 1.3098, 1.6618, 2.0530],
        [-2.5948, -2.2441, -1.9484, -1.7594, -1.6179, -1.3985, -1.2309, -0.9557, -0.7227, -0.4921, -0.2319, 0.0658, 0.4156, 0.9027, 1.2973, 1.6435, 2.0408],
        [-2.5784, -2.2332, -1.9399, -1.7564, -1.6171, -1.4028, -1.2349, -0.9633, -0.7281, -0.4947, -0.2329, 0.0628, 0.4120, 0.9010, 1.3030, 1.6503, 2.0432],
        [-2.5529, -2.2249, -1.9363, -1.7494, -1.6113, -1.3959, -1.2286, -0.9588, -0.7267, -0.4933, -0.2354, 0.0595, 0.4107, 0.8905, 1.2861, 1.6241, 2.0146],
        [-2.5680, -2.2214, -1.9379, -1.7562, -1.6126, -1.4014, -1.2360, -0.9639, -0.7316, -0.4997, -0.2374, 0.0551, 0.4010, 0.8806, 1.2729, 1.6197, 2.0110],
        [-2.5627, -2.2250, -1.9328, -1.7493, -1.6114, -1.3938, -1.2281, -0.9601, -0.7327, -0.5008, -0.2406, 0.0554, 0.4033, 0.8877, 1.2703, 1.6006, 1.9982],
        [-2.5726, -2.2449, -1.9444, -1.7642, -1.6185, -1.4032, -1.2338, -0.9678, -0.7327, -0.5049, -0.2410, 0.0548, 0.3939, 0.8818, 1.2806, 1.6060, 1.9833],
    ],
    'drift': [
        [-3.7255, -3.3153, -2.9857, -2.7869, -2.6368, -2.4106, -2.2376, -1.9674, -1.7437, -1.5384, -1.3299, -1.0993, -0.8048, -0.3708, -0.0012, 0.3214, 0.7040],
        [-3.5607, -3.2138, -2.9206, -2.7329, -2.5983, -2.3869, -2.2244, -1.9657, -1.7495, -1.5504, -1.3479, -1.1227, -0.8350, -0.4090, -0.0437, 0.2764, 0.6472],
        [-3.4957, -3.1674, -2.8897, -2.7138, -2.5796, -2.3779, -2.2216, -1.9723, -1.7578, -1.5596, -1.3577, -1.1332, -0.8489, -0.4250, -0.0610, 0.2534, 0.6228],
        [-3.4598, -3.1424, -2.8728, -2.7033, -2.5722, -2.3766, -2.2213, -1.9710, -1.7599, -1.5611, -1.3633, -1.1367, -0.8529, -0.4310, -0.0643, 0.2549, 0.6226],
        [-3.4550, -3.1318, -2.8696, -2.7028, -2.5758, -2.3783, -2.2241, -1.9743, -1.7620, -1.5646, -1.3644, -1.1434, -0.8620, -0.4388, -0.0706, 0.2457, 0.6135],
        [-3.4344, -3.1258, -2.8635, -2.6918, -2.5674, -2.3747, -2.2203, -1.9708, -1.7608, -1.5640, -1.3655, -1.1432, -0.8615, -0.4323, -0.0714, 0.2436, 0.6293],
        [-3.4387, -3.1164, -2.8631, -2.6949, -2.5690, -2.3725, -2.2160, -1.9676, -1.7581, -1.5597, -1.3620, -1.1394, -0.8615, -0.4378, -0.0790, 0.2437, 0.6160],
        [-3.4494, -3.1419, -2.8763, -2.7058, -2.5740, -2.3770, -2.2227, -1.9775, -1.7644, -1.5689, -1.3728, -1.1522, -0.8653, -0.4517, -0.0867, 0.2337, 0.5973],
    ],
    'drift_trend': [
        [-4.3712, -3.9441, -3.5940, -3.3870, -3.2346, -3.0047, -2.8313, -2.5608, -2.3380, -2.1401, -1.9471, -1.7454, -1.5063, -1.1414, -0.8142, -0.5160, -0.1474],
        [-4.1502, -3.8024, -3.5076, -3.3253, -3.1851, -2.9763, -2.8157, -2.5583, -2.3487, -2.1588, -1.9734, -1.7761, -1.5429, -1.1922, -0.8696, -0.5849, -0.2511],
        [-4.0477, -3.7282, -3.4552, -3.2866, -3.1568, -2.9583, -2.8027, -2.5599, -2.3566, -2.1699, -1.9891, -1.7962, -1.5663, -1.2197, -0.9111, -0.6235, -0.2858],
        [-3.9975, -3.6909, -3.4291, -3.2641, -3.1400, -2.9453, -2.7963, -2.5562, -2.3573, -2.1746, -1.9952, -1.8022, -1.5770, -1.2387, -0.9257, -0.6495, -0.3213],
        [-3.9777, -3.6807, -3.4224, -3.2586, -3.1337, -2.9412, -2.7946, -2.5596, -2.3604, -2.1781, -1.9984, -1.8057, -1.5788, -1.2409, -0.9358, -0.6552, -0.3148],
        [-3.9737, -3.6749, -3.4227, -3.2596, -3.1360, -2.9452, -2.7970, -2.5607, -2.3612, -2.1802, -1.9998, -1.8112, -1.5836, -1.2484, -0.9379, -0.6502, -0.3164],
        [-3.9593, -3.6661, -3.4065, -3.2474, -3.1231, -2.9391, -2.7900, -2.5570, -2.3620, -2.1803, -2.0005, -1.8121, -1.5870, -1.2486, -0.9483, -0.6620, -0.3122],
        [-3.9432, -3.6457, -3.4067, -3.2538, -3.1273, -2.9412, -2.7928, -2.5574, -2.3649, -2.1875, -2.0094, -1.8187, -1.5896, -1.2599, -0.9602, -0.6860, -0.3581],
    ],
}
