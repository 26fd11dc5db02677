#!/usr/bin/env python3
"""Regenerate the CSV assets bundled in src/lumispec/data/.

The reference tables are embedded here verbatim so the shipped files have a
reviewable transcription record. Run from the repository root:

    python scripts/generate_data_assets.py

The demo SPD asset additionally needs the package importable (pip install -e .).
"""

import csv
import json
from pathlib import Path

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "lumispec" / "data"

# CIE 1931 2-degree standard observer color matching functions,
# 380-780 nm at 5 nm (CIE 15:2004 Table T.2).
CMF_2DEG = [
    (380, 0.001368, 0.000039, 0.006450),
    (385, 0.002236, 0.000064, 0.010550),
    (390, 0.004243, 0.000120, 0.020050),
    (395, 0.007650, 0.000217, 0.036210),
    (400, 0.014310, 0.000396, 0.067850),
    (405, 0.023190, 0.000640, 0.110200),
    (410, 0.043510, 0.001210, 0.207400),
    (415, 0.077630, 0.002180, 0.371300),
    (420, 0.134380, 0.004000, 0.645600),
    (425, 0.214770, 0.007300, 1.039050),
    (430, 0.283900, 0.011600, 1.385600),
    (435, 0.328500, 0.016840, 1.622960),
    (440, 0.348280, 0.023000, 1.747060),
    (445, 0.348060, 0.029800, 1.782600),
    (450, 0.336200, 0.038000, 1.772110),
    (455, 0.318700, 0.048000, 1.744100),
    (460, 0.290800, 0.060000, 1.669200),
    (465, 0.251100, 0.073900, 1.528100),
    (470, 0.195360, 0.090980, 1.287640),
    (475, 0.142100, 0.112600, 1.041900),
    (480, 0.095640, 0.139020, 0.812950),
    (485, 0.058010, 0.169300, 0.616200),
    (490, 0.032010, 0.208020, 0.465180),
    (495, 0.014700, 0.258600, 0.353300),
    (500, 0.004900, 0.323000, 0.272000),
    (505, 0.002400, 0.407300, 0.212300),
    (510, 0.009300, 0.503000, 0.158200),
    (515, 0.029100, 0.608200, 0.111700),
    (520, 0.063270, 0.710000, 0.078250),
    (525, 0.109600, 0.793200, 0.057250),
    (530, 0.165500, 0.862000, 0.042160),
    (535, 0.225750, 0.914850, 0.029840),
    (540, 0.290400, 0.954000, 0.020300),
    (545, 0.359700, 0.980300, 0.013400),
    (550, 0.433450, 0.994950, 0.008750),
    (555, 0.512050, 1.000000, 0.005750),
    (560, 0.594500, 0.995000, 0.003900),
    (565, 0.678400, 0.978600, 0.002750),
    (570, 0.762100, 0.952000, 0.002100),
    (575, 0.842500, 0.915400, 0.001800),
    (580, 0.916300, 0.870000, 0.001650),
    (585, 0.978600, 0.816300, 0.001400),
    (590, 1.026300, 0.757000, 0.001100),
    (595, 1.056700, 0.694900, 0.001000),
    (600, 1.062200, 0.631000, 0.000800),
    (605, 1.045600, 0.566800, 0.000600),
    (610, 1.002600, 0.503000, 0.000340),
    (615, 0.938400, 0.441200, 0.000240),
    (620, 0.854450, 0.381000, 0.000190),
    (625, 0.751400, 0.321000, 0.000100),
    (630, 0.642400, 0.265000, 0.000050),
    (635, 0.541900, 0.217000, 0.000030),
    (640, 0.447900, 0.175000, 0.000020),
    (645, 0.360800, 0.138200, 0.000010),
    (650, 0.283500, 0.107000, 0.000000),
    (655, 0.218700, 0.081600, 0.000000),
    (660, 0.164900, 0.061000, 0.000000),
    (665, 0.121200, 0.044580, 0.000000),
    (670, 0.087400, 0.032000, 0.000000),
    (675, 0.063600, 0.023200, 0.000000),
    (680, 0.046770, 0.017000, 0.000000),
    (685, 0.032900, 0.011920, 0.000000),
    (690, 0.022700, 0.008210, 0.000000),
    (695, 0.015840, 0.005723, 0.000000),
    (700, 0.011359, 0.004102, 0.000000),
    (705, 0.008111, 0.002929, 0.000000),
    (710, 0.005790, 0.002091, 0.000000),
    (715, 0.004109, 0.001484, 0.000000),
    (720, 0.002899, 0.001047, 0.000000),
    (725, 0.002049, 0.000740, 0.000000),
    (730, 0.001440, 0.000520, 0.000000),
    (735, 0.001000, 0.000361, 0.000000),
    (740, 0.000690, 0.000249, 0.000000),
    (745, 0.000476, 0.000172, 0.000000),
    (750, 0.000332, 0.000120, 0.000000),
    (755, 0.000235, 0.000085, 0.000000),
    (760, 0.000166, 0.000060, 0.000000),
    (765, 0.000117, 0.000042, 0.000000),
    (770, 0.000083, 0.000030, 0.000000),
    (775, 0.000059, 0.000021, 0.000000),
    (780, 0.000042, 0.000015, 0.000000),
]

# Daylight-model components S0, S1, S2, 380-780 nm at 5 nm
# (CIE 15:2004 Appendix B tabulation; odd rows are the standard linear
# interpolation of the 10 nm table).
DAYLIGHT_S0_S1_S2 = [
    (380, 63.40, 38.50, 3.00),
    (385, 64.60, 36.75, 2.10),
    (390, 65.80, 35.00, 1.20),
    (395, 80.30, 39.20, 0.05),
    (400, 94.80, 43.40, -1.10),
    (405, 99.80, 44.85, -0.80),
    (410, 104.80, 46.30, -0.50),
    (415, 105.35, 45.10, -0.60),
    (420, 105.90, 43.90, -0.70),
    (425, 101.35, 40.50, -0.95),
    (430, 96.80, 37.10, -1.20),
    (435, 105.35, 36.90, -1.90),
    (440, 113.90, 36.70, -2.60),
    (445, 119.75, 36.30, -2.75),
    (450, 125.60, 35.90, -2.90),
    (455, 125.55, 34.25, -2.85),
    (460, 125.50, 32.60, -2.80),
    (465, 123.40, 30.25, -2.70),
    (470, 121.30, 27.90, -2.60),
    (475, 121.30, 26.10, -2.60),
    (480, 121.30, 24.30, -2.60),
    (485, 117.40, 22.20, -2.20),
    (490, 113.50, 20.10, -1.80),
    (495, 113.30, 18.15, -1.65),
    (500, 113.10, 16.20, -1.50),
    (505, 111.95, 14.70, -1.40),
    (510, 110.80, 13.20, -1.30),
    (515, 108.65, 10.90, -1.25),
    (520, 106.50, 8.60, -1.20),
    (525, 107.65, 7.35, -1.10),
    (530, 108.80, 6.10, -1.00),
    (535, 107.05, 5.15, -0.75),
    (540, 105.30, 4.20, -0.50),
    (545, 104.85, 3.05, -0.40),
    (550, 104.40, 1.90, -0.30),
    (555, 102.20, 0.95, -0.15),
    (560, 100.00, 0.00, 0.00),
    (565, 98.00, -0.80, 0.10),
    (570, 96.00, -1.60, 0.20),
    (575, 95.55, -2.55, 0.35),
    (580, 95.10, -3.50, 0.50),
    (585, 92.10, -3.50, 1.30),
    (590, 89.10, -3.50, 2.10),
    (595, 89.80, -4.65, 2.65),
    (600, 90.50, -5.80, 3.20),
    (605, 90.40, -6.50, 3.65),
    (610, 90.30, -7.20, 4.10),
    (615, 89.35, -7.90, 4.40),
    (620, 88.40, -8.60, 4.70),
    (625, 86.20, -9.05, 4.90),
    (630, 84.00, -9.50, 5.10),
    (635, 84.55, -10.20, 5.90),
    (640, 85.10, -10.90, 6.70),
    (645, 83.50, -10.80, 7.00),
    (650, 81.90, -10.70, 7.30),
    (655, 82.25, -11.35, 7.95),
    (660, 82.60, -12.00, 8.60),
    (665, 83.75, -13.00, 9.20),
    (670, 84.90, -14.00, 9.80),
    (675, 83.10, -13.80, 10.00),
    (680, 81.30, -13.60, 10.20),
    (685, 76.60, -12.80, 9.25),
    (690, 71.90, -12.00, 8.30),
    (695, 73.10, -12.65, 8.95),
    (700, 74.30, -13.30, 9.60),
    (705, 75.35, -13.10, 9.05),
    (710, 76.40, -12.90, 8.50),
    (715, 69.85, -11.75, 7.75),
    (720, 63.30, -10.60, 7.00),
    (725, 67.50, -11.10, 7.30),
    (730, 71.70, -11.60, 7.60),
    (735, 74.35, -11.90, 7.80),
    (740, 77.00, -12.20, 8.00),
    (745, 71.10, -11.20, 7.35),
    (750, 65.20, -10.20, 6.70),
    (755, 56.45, -9.00, 5.95),
    (760, 47.70, -7.80, 5.20),
    (765, 58.15, -9.50, 6.30),
    (770, 68.60, -11.20, 7.40),
    (775, 66.80, -10.80, 7.10),
    (780, 65.00, -10.40, 6.80),
]

# Spectral reflectances of the eight standard test color samples,
# 380-780 nm at 10 nm (CIE 13.3-1995 Table 1, samples 1-8).
TCS_REFLECTANCES = [
    (380, 0.219, 0.070, 0.065, 0.074, 0.295, 0.151, 0.378, 0.104),
    (390, 0.252, 0.089, 0.070, 0.093, 0.310, 0.265, 0.524, 0.170),
    (400, 0.256, 0.111, 0.073, 0.116, 0.313, 0.410, 0.551, 0.319),
    (410, 0.252, 0.118, 0.074, 0.124, 0.319, 0.492, 0.559, 0.462),
    (420, 0.244, 0.121, 0.074, 0.128, 0.326, 0.517, 0.561, 0.490),
    (430, 0.237, 0.122, 0.073, 0.135, 0.334, 0.531, 0.556, 0.482),
    (440, 0.230, 0.123, 0.073, 0.144, 0.346, 0.544, 0.544, 0.462),
    (450, 0.225, 0.127, 0.074, 0.161, 0.360, 0.556, 0.522, 0.439),
    (460, 0.220, 0.131, 0.077, 0.186, 0.381, 0.554, 0.488, 0.413),
    (470, 0.216, 0.138, 0.085, 0.229, 0.403, 0.541, 0.448, 0.382),
    (480, 0.214, 0.150, 0.109, 0.281, 0.415, 0.519, 0.408, 0.352),
    (490, 0.216, 0.174, 0.148, 0.332, 0.419, 0.488, 0.363, 0.325),
    (500, 0.223, 0.207, 0.198, 0.370, 0.413, 0.450, 0.324, 0.299),
    (510, 0.226, 0.242, 0.241, 0.390, 0.403, 0.414, 0.301, 0.283),
    (520, 0.225, 0.260, 0.278, 0.395, 0.389, 0.377, 0.283, 0.270),
    (530, 0.227, 0.267, 0.339, 0.385, 0.372, 0.341, 0.265, 0.256),
    (540, 0.236, 0.272, 0.392, 0.367, 0.353, 0.309, 0.257, 0.250),
    (550, 0.253, 0.282, 0.400, 0.341, 0.331, 0.279, 0.259, 0.254),
    (560, 0.272, 0.299, 0.380, 0.312, 0.308, 0.253, 0.260, 0.264),
    (570, 0.298, 0.322, 0.349, 0.280, 0.284, 0.234, 0.256, 0.272),
    (580, 0.341, 0.335, 0.315, 0.247, 0.260, 0.225, 0.254, 0.278),
    (590, 0.390, 0.341, 0.285, 0.214, 0.232, 0.221, 0.270, 0.295),
    (600, 0.424, 0.342, 0.264, 0.185, 0.210, 0.220, 0.302, 0.348),
    (610, 0.442, 0.342, 0.252, 0.169, 0.194, 0.220, 0.344, 0.434),
    (620, 0.450, 0.341, 0.241, 0.160, 0.185, 0.223, 0.377, 0.528),
    (630, 0.451, 0.339, 0.229, 0.154, 0.180, 0.233, 0.400, 0.604),
    (640, 0.451, 0.338, 0.220, 0.151, 0.176, 0.244, 0.420, 0.648),
    (650, 0.450, 0.336, 0.216, 0.148, 0.175, 0.258, 0.438, 0.676),
    (660, 0.451, 0.334, 0.219, 0.148, 0.175, 0.268, 0.452, 0.693),
    (670, 0.453, 0.332, 0.230, 0.151, 0.180, 0.278, 0.462, 0.705),
    (680, 0.455, 0.331, 0.251, 0.158, 0.186, 0.283, 0.468, 0.712),
    (690, 0.458, 0.329, 0.288, 0.165, 0.192, 0.291, 0.473, 0.717),
    (700, 0.462, 0.328, 0.340, 0.170, 0.199, 0.302, 0.483, 0.721),
    (710, 0.464, 0.326, 0.390, 0.170, 0.199, 0.325, 0.496, 0.719),
    (720, 0.466, 0.324, 0.431, 0.166, 0.196, 0.351, 0.511, 0.725),
    (730, 0.466, 0.324, 0.460, 0.164, 0.195, 0.376, 0.525, 0.729),
    (740, 0.467, 0.322, 0.481, 0.168, 0.197, 0.401, 0.539, 0.730),
    (750, 0.467, 0.320, 0.493, 0.177, 0.203, 0.425, 0.553, 0.730),
    (760, 0.467, 0.316, 0.500, 0.185, 0.208, 0.447, 0.565, 0.730),
    (770, 0.467, 0.315, 0.505, 0.192, 0.215, 0.469, 0.575, 0.730),
    (780, 0.467, 0.314, 0.516, 0.197, 0.219, 0.485, 0.581, 0.730),
]

MANIFEST = {
    "cmf_2deg": {
        "file": "cie_1931_2deg_cmf.csv",
        "description": "1931 2-degree standard observer color matching functions",
        "grid": "380-780 nm, 5 nm",
        "source": "CIE 15:2004 Table T.2",
    },
    "daylight_components": {
        "file": "cie_daylight_components.csv",
        "description": "Daylight-model component curves S0, S1, S2",
        "grid": "380-780 nm, 5 nm (10 nm table with standard linear interpolation)",
        "source": "CIE 15:2004 Appendix B",
    },
    "tcs": {
        "file": "cie_tcs_reflectances.csv",
        "description": "Spectral reflectances of test color samples 1-8",
        "grid": "380-780 nm, 10 nm (loader interpolates to the 5 nm analysis grid)",
        "source": "CIE 13.3-1995 Table 1",
        "note": "Transcribed at 10 nm from the published table; small "
                "edition/rounding differences against other reprints are "
                "possible and affect absolute index values by well under "
                "one point.",
    },
    "demo_spd_d6504": {
        "file": "demo_d6504_spd.csv",
        "description": "Demo input: synthesized daylight SPD at 6504 K, "
                       "peak-normalized, canonical grid",
        "source": "generated by lumispec.reference.daylight_spd",
    },
    "demo_calibration": {
        "file": "demo_calibration.txt",
        "description": "Demo wavelength calibration: pixel 1 at 391 nm, "
                       "pixel 1500 at 723 nm",
        "source": "prototype factory calibration anchors",
    },
}


def write_csv(path, header, rows):
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([f"{row[0]:g}"] + [f"{v:g}" for v in row[1:]])
    print(f"wrote {path}")


def main():
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    write_csv(DATA_DIR / MANIFEST["cmf_2deg"]["file"],
              ["wavelength_nm", "xbar", "ybar", "zbar"], CMF_2DEG)
    write_csv(DATA_DIR / MANIFEST["daylight_components"]["file"],
              ["wavelength_nm", "s0", "s1", "s2"], DAYLIGHT_S0_S1_S2)
    write_csv(DATA_DIR / MANIFEST["tcs"]["file"],
              ["wavelength_nm"] + [f"tcs{i:02d}" for i in range(1, 9)],
              TCS_REFLECTANCES)

    manifest_path = DATA_DIR / "manifest.json"
    manifest_path.write_text(json.dumps(MANIFEST, indent=2) + "\n",
                             encoding="utf-8")
    print(f"wrote {manifest_path}")

    try:
        from lumispec.ciedata import bundled_daylight_components
        from lumispec.reference import daylight_spd
        from lumispec.sensor import DEFAULT_CALIBRATION, write_calibration
        from lumispec.spectral import CANONICAL_GRID, write_spd_csv
    except ImportError as exc:
        print(f"skipping demo assets (package not importable: {exc})")
        return

    comps = bundled_daylight_components()
    demo = daylight_spd(6504.0, CANONICAL_GRID, comps)
    write_spd_csv(demo, DATA_DIR / MANIFEST["demo_spd_d6504"]["file"])
    print(f"wrote {DATA_DIR / MANIFEST['demo_spd_d6504']['file']}")
    write_calibration(DEFAULT_CALIBRATION,
                      DATA_DIR / MANIFEST["demo_calibration"]["file"])
    print(f"wrote {DATA_DIR / MANIFEST['demo_calibration']['file']}")


if __name__ == "__main__":
    main()
