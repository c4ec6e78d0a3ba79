//! Coefficient formulas of the elimination polynomials, as polynomials in
//! `(k, l)`.

/// `scale * prod_f (sum_t coef * k^a * l^b)` over the factor list.
pub(super) struct KlCoeff {
    pub scale: i64,
    pub factors: &'static [&'static [(i64, u32, u32)]],
}

/// `coeff * k^k * l^l * y2^a * y3^b * y4^c` with `y = [a, b, c]`.
pub(super) struct SysTerm {
    pub coeff: i64,
    pub k: u32,
    pub l: u32,
    pub y: [u32; 3],
}

/// `h(y4)`, ascending in `y4`.
pub(super) const H_COEFFS: [KlCoeff; 9] = [
    // y4^0
    KlCoeff {
        scale: 2,
        factors: &[
            &[(4, 1, 0), (2, 0, 1), (1, 0, 0)],
            &[(2, 1, 0), (1, 0, 0)],
            &[(2, 1, 0), (1, 0, 0)],
            &[(5, 1, 0), (1, 0, 0)],
            &[(5, 1, 0), (1, 0, 0)],
        ],
    },
    // y4^1
    KlCoeff {
        scale: -4,
        factors: &[
            &[(2, 1, 0), (1, 0, 0)],
            &[(2, 1, 0), (1, 0, 1), (1, 0, 0)],
            &[(3, 1, 0), (1, 0, 0)],
            &[(5, 1, 0), (1, 0, 0)],
            &[(8, 1, 0), (2, 0, 1), (1, 0, 0)],
        ],
    },
    // y4^2
    KlCoeff {
        scale: 1,
        factors: &[&[
            (1792, 5, 0),
            (2432, 4, 1),
            (848, 3, 2),
            (36, 2, 3),
            (2848, 4, 0),
            (3100, 3, 1),
            (896, 2, 2),
            (24, 1, 3),
            (1714, 3, 0),
            (1427, 2, 1),
            (304, 1, 2),
            (4, 0, 3),
            (478, 2, 0),
            (278, 1, 1),
            (32, 0, 2),
            (58, 1, 0),
            (19, 0, 1),
            (2, 0, 0),
        ]],
    },
    // y4^3
    KlCoeff {
        scale: -4,
        factors: &[
            &[(2, 1, 0), (1, 0, 1), (1, 0, 0)],
            &[
                (96, 4, 0),
                (248, 3, 1),
                (62, 2, 2),
                (92, 3, 0),
                (215, 2, 1),
                (46, 1, 2),
                (32, 2, 0),
                (55, 1, 1),
                (8, 0, 2),
                (4, 1, 0),
                (4, 0, 1),
            ],
        ],
    },
    // y4^4
    KlCoeff {
        scale: 1,
        factors: &[&[
            (128, 5, 0),
            (1376, 4, 1),
            (1472, 3, 2),
            (468, 2, 3),
            (24, 1, 4),
            (160, 4, 0),
            (1684, 3, 1),
            (1372, 2, 2),
            (336, 1, 3),
            (8, 0, 4),
            (82, 3, 0),
            (713, 2, 1),
            (406, 1, 2),
            (60, 0, 3),
            (20, 2, 0),
            (118, 1, 1),
            (38, 0, 2),
            (2, 1, 0),
            (5, 0, 1),
        ]],
    },
    // y4^5
    KlCoeff {
        scale: -8,
        factors: &[
            &[(1, 0, 1)],
            &[(2, 1, 0), (1, 0, 1), (1, 0, 0)],
            &[
                (28, 3, 0),
                (40, 2, 1),
                (10, 1, 2),
                (14, 2, 0),
                (21, 1, 1),
                (4, 0, 2),
                (2, 1, 0),
                (2, 0, 1),
            ],
        ],
    },
    // y4^6
    KlCoeff {
        scale: 1,
        factors: &[
            &[(1, 0, 1)],
            &[
                (64, 4, 0),
                (304, 3, 1),
                (284, 2, 2),
                (88, 1, 3),
                (4, 0, 4),
                (40, 3, 0),
                (238, 2, 1),
                (162, 1, 2),
                (32, 0, 3),
                (8, 2, 0),
                (51, 1, 1),
                (19, 0, 2),
                (2, 0, 1),
            ],
        ],
    },
    // y4^7
    KlCoeff {
        scale: -4,
        factors: &[
            &[(1, 0, 1)],
            &[(1, 0, 1)],
            &[(2, 1, 0), (1, 0, 1), (1, 0, 0)],
            &[(8, 2, 0), (8, 1, 1), (2, 0, 2), (1, 0, 1)],
        ],
    },
    // y4^8
    KlCoeff {
        scale: 2,
        factors: &[
            &[(1, 0, 1)],
            &[(1, 0, 1)],
            &[(1, 1, 0), (1, 0, 1)],
            &[(4, 2, 0), (4, 1, 1), (2, 0, 2), (1, 0, 1)],
        ],
    },
];
/// `y3`-coefficient `C` of `h(y3, y4)`.
pub(super) const HB_Y3_COEFF: KlCoeff = KlCoeff {
    scale: 1,
    factors: &[
        &[(2, 0, 1), (1, 0, 0)],
        &[(1, 1, 0), (1, 0, 0)],
        &[(2, 1, 0), (1, 0, 0)],
        &[(4, 1, 0), (2, 0, 1), (1, 0, 0)],
        &[(5, 1, 0), (1, 0, 0)],
        &[(6, 2, 0), (4, 1, 1), (2, 0, 2), (2, 1, 0), (1, 0, 1)],
    ],
};
/// `y3`-free part `A(y4)` of `h(y3, y4)`, ascending in `y4`.
pub(super) const HB_Y3_FREE: [KlCoeff; 8] = [
    // y4^0
    KlCoeff {
        scale: 16,
        factors: &[
            &[(1, 1, 0)],
            &[(1, 1, 0), (1, 0, 0)],
            &[(2, 1, 0), (1, 0, 0)],
            &[(2, 1, 0), (1, 0, 1), (1, 0, 0)],
            &[(5, 1, 0), (1, 0, 0)],
            &[(6, 2, 0), (4, 1, 1), (2, 0, 2), (2, 1, 0), (1, 0, 1)],
        ],
    },
    // y4^1
    KlCoeff {
        scale: -1,
        factors: &[&[
            (2944, 7, 0),
            (5920, 6, 1),
            (6800, 5, 2),
            (4104, 4, 3),
            (960, 3, 4),
            (24, 2, 5),
            (7632, 6, 0),
            (13816, 5, 1),
            (13320, 4, 2),
            (6568, 3, 3),
            (1284, 2, 4),
            (32, 1, 5),
            (7480, 5, 0),
            (11750, 4, 1),
            (9368, 3, 2),
            (3574, 2, 3),
            (512, 1, 4),
            (8, 0, 5),
            (3546, 4, 0),
            (4678, 3, 1),
            (2943, 2, 2),
            (784, 1, 3),
            (60, 0, 4),
            (838, 3, 0),
            (893, 2, 1),
            (400, 1, 2),
            (58, 0, 3),
            (86, 2, 0),
            (70, 1, 1),
            (17, 0, 2),
            (2, 1, 0),
            (1, 0, 1),
        ]],
    },
    // y4^2
    KlCoeff {
        scale: 4,
        factors: &[
            &[(2, 1, 0), (1, 0, 1), (1, 0, 0)],
            &[
                (192, 6, 0),
                (624, 5, 1),
                (1052, 4, 2),
                (648, 3, 3),
                (108, 2, 4),
                (376, 5, 0),
                (1166, 4, 1),
                (1412, 3, 2),
                (684, 2, 3),
                (96, 1, 4),
                (248, 4, 0),
                (688, 3, 1),
                (631, 2, 2),
                (216, 1, 3),
                (20, 0, 4),
                (72, 3, 0),
                (158, 2, 1),
                (108, 1, 2),
                (20, 0, 3),
                (8, 2, 0),
                (12, 1, 1),
                (5, 0, 2),
            ],
        ],
    },
    // y4^3
    KlCoeff {
        scale: -1,
        factors: &[&[
            (256, 7, 0),
            (2976, 6, 1),
            (8944, 5, 2),
            (10696, 4, 3),
            (5680, 3, 4),
            (1224, 2, 5),
            (56, 1, 6),
            (576, 6, 0),
            (6656, 5, 1),
            (15528, 4, 2),
            (14480, 3, 3),
            (5996, 2, 4),
            (988, 1, 5),
            (24, 0, 6),
            (484, 5, 0),
            (5282, 4, 1),
            (9632, 3, 2),
            (6830, 2, 3),
            (2006, 1, 4),
            (196, 0, 5),
            (204, 4, 0),
            (1882, 3, 1),
            (2625, 2, 2),
            (1293, 1, 3),
            (210, 0, 4),
            (44, 3, 0),
            (294, 2, 1),
            (293, 1, 2),
            (75, 0, 3),
            (4, 2, 0),
            (14, 1, 1),
            (8, 0, 2),
        ]],
    },
    // y4^4
    KlCoeff {
        scale: 4,
        factors: &[
            &[(1, 0, 1)],
            &[(2, 1, 0), (1, 0, 1), (1, 0, 0)],
            &[
                (112, 5, 0),
                (448, 4, 1),
                (664, 3, 2),
                (360, 2, 3),
                (60, 1, 4),
                (168, 4, 0),
                (508, 3, 1),
                (556, 2, 2),
                (228, 1, 3),
                (28, 0, 4),
                (64, 3, 0),
                (172, 2, 1),
                (131, 1, 2),
                (28, 0, 3),
                (8, 2, 0),
                (16, 1, 1),
                (7, 0, 2),
            ],
        ],
    },
    // y4^5
    KlCoeff {
        scale: -2,
        factors: &[
            &[(1, 0, 1)],
            &[
                (64, 6, 0),
                (480, 5, 1),
                (1428, 4, 2),
                (1632, 3, 3),
                (824, 2, 4),
                (172, 1, 5),
                (8, 0, 6),
                (104, 5, 0),
                (730, 4, 1),
                (1682, 3, 2),
                (1428, 2, 3),
                (504, 1, 4),
                (64, 0, 5),
                (48, 4, 0),
                (357, 3, 1),
                (622, 2, 2),
                (355, 1, 3),
                (66, 0, 4),
                (8, 3, 0),
                (61, 2, 1),
                (77, 1, 2),
                (22, 0, 3),
                (2, 1, 1),
                (2, 0, 2),
            ],
        ],
    },
    // y4^6
    KlCoeff {
        scale: 8,
        factors: &[
            &[(1, 0, 1)],
            &[(1, 0, 1)],
            &[(2, 1, 0), (1, 0, 1), (1, 0, 0)],
            &[(1, 2, 0), (4, 1, 1), (2, 0, 2), (1, 1, 0), (1, 0, 1)],
            &[(8, 2, 0), (8, 1, 1), (2, 0, 2), (1, 0, 1)],
        ],
    },
    // y4^7
    KlCoeff {
        scale: -4,
        factors: &[
            &[(1, 0, 1)],
            &[(1, 0, 1)],
            &[(1, 1, 0), (1, 0, 1)],
            &[(1, 2, 0), (4, 1, 1), (2, 0, 2), (1, 1, 0), (1, 0, 1)],
            &[(4, 2, 0), (4, 1, 1), (2, 0, 2), (1, 0, 1)],
        ],
    },
];
/// `t(y3)`, ascending in `y3`.
pub(super) const T_COEFFS: [KlCoeff; 9] = [
    // y3^0
    KlCoeff {
        scale: 4,
        factors: &[
            &[(1, 0, 1), (1, 0, 0)],
            &[(1, 0, 1), (1, 0, 0)],
            &[(1, 0, 1), (1, 0, 0)],
            &[(1, 0, 1), (1, 0, 0)],
            &[(1, 1, 0), (1, 0, 1)],
            &[(3, 1, 0), (2, 0, 1), (1, 0, 0)],
            &[(3, 1, 0), (2, 0, 1), (1, 0, 0)],
        ],
    },
    // y3^1
    KlCoeff {
        scale: -8,
        factors: &[
            &[(1, 0, 1), (1, 0, 0)],
            &[(1, 0, 1), (1, 0, 0)],
            &[(1, 0, 1), (1, 0, 0)],
            &[(2, 1, 0), (1, 0, 1), (1, 0, 0)],
            &[(3, 1, 0), (2, 0, 1), (1, 0, 0)],
            &[(3, 2, 0), (12, 1, 1), (8, 0, 2), (1, 1, 0), (2, 0, 1)],
        ],
    },
    // y3^2
    KlCoeff {
        scale: 4,
        factors: &[
            &[(1, 0, 1), (1, 0, 0)],
            &[(1, 0, 1), (1, 0, 0)],
            &[
                (40, 5, 0),
                (482, 4, 1),
                (1318, 3, 2),
                (1406, 2, 3),
                (656, 1, 4),
                (112, 0, 5),
                (125, 4, 0),
                (800, 3, 1),
                (1593, 2, 2),
                (1156, 1, 3),
                (276, 0, 4),
                (79, 3, 0),
                (410, 2, 1),
                (584, 1, 2),
                (224, 0, 3),
                (17, 2, 0),
                (84, 1, 1),
                (67, 0, 2),
                (1, 1, 0),
                (6, 0, 1),
            ],
        ],
    },
    // y3^3
    KlCoeff {
        scale: -4,
        factors: &[
            &[(1, 0, 1), (1, 0, 0)],
            &[(2, 1, 0), (1, 0, 1), (1, 0, 0)],
            &[
                (256, 4, 1),
                (1164, 3, 2),
                (1684, 2, 3),
                (1024, 1, 4),
                (224, 0, 5),
                (108, 4, 0),
                (725, 3, 1),
                (1694, 2, 2),
                (1560, 1, 3),
                (480, 0, 4),
                (72, 3, 0),
                (358, 2, 1),
                (616, 1, 2),
                (316, 0, 3),
                (12, 2, 0),
                (61, 1, 1),
                (70, 0, 2),
                (4, 0, 1),
            ],
        ],
    },
    // y3^4
    KlCoeff {
        scale: 1,
        factors: &[&[
            (800, 6, 1),
            (9792, 5, 2),
            (27248, 4, 3),
            (34472, 3, 4),
            (23124, 2, 5),
            (8000, 1, 6),
            (1120, 0, 7),
            (640, 6, 0),
            (9168, 5, 1),
            (37136, 4, 2),
            (64046, 3, 3),
            (55996, 2, 4),
            (24520, 1, 5),
            (4240, 0, 6),
            (1712, 5, 0),
            (13190, 4, 1),
            (36747, 3, 2),
            (45785, 2, 3),
            (27136, 1, 4),
            (6124, 0, 5),
            (1108, 4, 0),
            (6824, 3, 1),
            (14530, 2, 2),
            (12968, 1, 3),
            (4168, 0, 4),
            (264, 3, 0),
            (1526, 2, 1),
            (2483, 1, 2),
            (1321, 0, 3),
            (20, 2, 0),
            (140, 1, 1),
            (160, 0, 2),
            (4, 0, 1),
        ]],
    },
    // y3^5
    KlCoeff {
        scale: -8,
        factors: &[
            &[(2, 1, 0), (1, 0, 1), (1, 0, 0)],
            &[
                (256, 5, 1),
                (1164, 4, 2),
                (1842, 3, 3),
                (1472, 2, 4),
                (624, 1, 5),
                (112, 0, 6),
                (108, 5, 0),
                (725, 4, 1),
                (1857, 3, 2),
                (2072, 2, 3),
                (1152, 1, 4),
                (268, 0, 5),
                (72, 4, 0),
                (400, 3, 1),
                (800, 2, 2),
                (646, 1, 3),
                (212, 0, 4),
                (12, 3, 0),
                (81, 2, 1),
                (121, 1, 2),
                (63, 0, 3),
                (6, 1, 1),
                (5, 0, 2),
            ],
        ],
    },
    // y3^6
    KlCoeff {
        scale: 1,
        factors: &[&[
            (640, 7, 0),
            (7712, 6, 1),
            (21968, 5, 2),
            (30576, 4, 3),
            (24804, 3, 4),
            (12288, 2, 5),
            (3520, 1, 6),
            (448, 0, 7),
            (2000, 6, 0),
            (13528, 5, 1),
            (31660, 4, 2),
            (36532, 3, 3),
            (23504, 2, 4),
            (8416, 1, 5),
            (1328, 0, 6),
            (1408, 5, 0),
            (7818, 4, 1),
            (15881, 3, 2),
            (14848, 2, 3),
            (7012, 1, 4),
            (1432, 0, 5),
            (368, 4, 0),
            (1924, 3, 1),
            (3456, 2, 2),
            (2412, 1, 3),
            (676, 0, 4),
            (32, 3, 0),
            (202, 2, 1),
            (301, 1, 2),
            (126, 0, 3),
            (8, 1, 1),
            (4, 0, 2),
        ]],
    },
    // y3^7
    KlCoeff {
        scale: -16,
        factors: &[
            &[(2, 1, 0), (1, 0, 1), (1, 0, 0)],
            &[(6, 2, 0), (4, 1, 1), (2, 0, 2), (2, 1, 0), (1, 0, 1)],
            &[
                (6, 4, 0),
                (24, 3, 1),
                (28, 2, 2),
                (16, 1, 3),
                (4, 0, 4),
                (2, 3, 0),
                (10, 2, 1),
                (10, 1, 2),
                (4, 0, 3),
                (1, 1, 1),
                (1, 0, 2),
            ],
        ],
    },
    // y3^8
    KlCoeff {
        scale: 1,
        factors: &[
            &[(4, 1, 0), (2, 0, 1), (1, 0, 0)],
            &[(4, 2, 0), (4, 1, 1), (2, 0, 2), (1, 0, 1)],
            &[(6, 2, 0), (4, 1, 1), (2, 0, 2), (2, 1, 0), (1, 0, 1)],
            &[(6, 2, 0), (4, 1, 1), (2, 0, 2), (2, 1, 0), (1, 0, 1)],
        ],
    },
];
/// The system after `y1 = y2`, `y5 = y6 = 1`.
pub(super) const F1_TERMS: &[SysTerm] = &[
    SysTerm {
        coeff: 1,
        k: 1,
        l: 0,
        y: [2, 1, 0],
    },
    SysTerm {
        coeff: -2,
        k: 1,
        l: 0,
        y: [1, 2, 2],
    },
    SysTerm {
        coeff: 1,
        k: 1,
        l: 0,
        y: [0, 1, 2],
    },
    SysTerm {
        coeff: 1,
        k: 0,
        l: 1,
        y: [2, 1, 2],
    },
    SysTerm {
        coeff: -1,
        k: 0,
        l: 1,
        y: [1, 0, 2],
    },
    SysTerm {
        coeff: -1,
        k: 0,
        l: 0,
        y: [1, 0, 2],
    },
    SysTerm {
        coeff: 1,
        k: 0,
        l: 0,
        y: [0, 1, 2],
    },
];
pub(super) const F2_TERMS: &[SysTerm] = &[
    SysTerm {
        coeff: 3,
        k: 1,
        l: 0,
        y: [2, 0, 0],
    },
    SysTerm {
        coeff: -4,
        k: 1,
        l: 0,
        y: [1, 0, 1],
    },
    SysTerm {
        coeff: 1,
        k: 1,
        l: 0,
        y: [0, 0, 2],
    },
    SysTerm {
        coeff: 1,
        k: 0,
        l: 1,
        y: [2, 0, 2],
    },
    SysTerm {
        coeff: -1,
        k: 0,
        l: 1,
        y: [1, 0, 3],
    },
    SysTerm {
        coeff: 1,
        k: 0,
        l: 0,
        y: [2, 0, 0],
    },
    SysTerm {
        coeff: -2,
        k: 0,
        l: 0,
        y: [1, 0, 1],
    },
    SysTerm {
        coeff: 1,
        k: 0,
        l: 0,
        y: [0, 0, 2],
    },
];
pub(super) const F3_TERMS: &[SysTerm] = &[
    SysTerm {
        coeff: 2,
        k: 1,
        l: 0,
        y: [1, 1, 0],
    },
    SysTerm {
        coeff: 4,
        k: 1,
        l: 0,
        y: [0, 2, 0],
    },
    SysTerm {
        coeff: 2,
        k: 1,
        l: 0,
        y: [0, 1, 1],
    },
    SysTerm {
        coeff: -8,
        k: 1,
        l: 0,
        y: [0, 1, 0],
    },
    SysTerm {
        coeff: 2,
        k: 0,
        l: 1,
        y: [0, 2, 0],
    },
    SysTerm {
        coeff: -4,
        k: 0,
        l: 1,
        y: [0, 1, 0],
    },
    SysTerm {
        coeff: 2,
        k: 0,
        l: 1,
        y: [0, 0, 0],
    },
    SysTerm {
        coeff: 1,
        k: 0,
        l: 0,
        y: [1, 1, 0],
    },
    SysTerm {
        coeff: 1,
        k: 0,
        l: 0,
        y: [0, 2, 0],
    },
    SysTerm {
        coeff: -4,
        k: 0,
        l: 0,
        y: [0, 1, 0],
    },
    SysTerm {
        coeff: 2,
        k: 0,
        l: 0,
        y: [0, 0, 0],
    },
];
/// `f1`, `f3` after eliminating `y2`, with denominators cleared.
pub(super) const G1_TERMS: &[SysTerm] = &[
    SysTerm {
        coeff: 6,
        k: 3,
        l: 0,
        y: [0, 2, 1],
    },
    SysTerm {
        coeff: -10,
        k: 3,
        l: 0,
        y: [0, 1, 0],
    },
    SysTerm {
        coeff: 2,
        k: 2,
        l: 1,
        y: [0, 2, 3],
    },
    SysTerm {
        coeff: -7,
        k: 2,
        l: 1,
        y: [0, 1, 2],
    },
    SysTerm {
        coeff: 3,
        k: 2,
        l: 1,
        y: [0, 0, 1],
    },
    SysTerm {
        coeff: 8,
        k: 2,
        l: 0,
        y: [0, 2, 1],
    },
    SysTerm {
        coeff: -17,
        k: 2,
        l: 0,
        y: [0, 1, 0],
    },
    SysTerm {
        coeff: 3,
        k: 2,
        l: 0,
        y: [0, 0, 1],
    },
    SysTerm {
        coeff: -1,
        k: 1,
        l: 2,
        y: [0, 1, 4],
    },
    SysTerm {
        coeff: 1,
        k: 1,
        l: 2,
        y: [0, 0, 3],
    },
    SysTerm {
        coeff: 2,
        k: 1,
        l: 1,
        y: [0, 2, 3],
    },
    SysTerm {
        coeff: -10,
        k: 1,
        l: 1,
        y: [0, 1, 2],
    },
    SysTerm {
        coeff: 1,
        k: 1,
        l: 1,
        y: [0, 0, 3],
    },
    SysTerm {
        coeff: 4,
        k: 1,
        l: 1,
        y: [0, 0, 1],
    },
    SysTerm {
        coeff: 2,
        k: 1,
        l: 0,
        y: [0, 2, 1],
    },
    SysTerm {
        coeff: -8,
        k: 1,
        l: 0,
        y: [0, 1, 0],
    },
    SysTerm {
        coeff: 4,
        k: 1,
        l: 0,
        y: [0, 0, 1],
    },
    SysTerm {
        coeff: -1,
        k: 0,
        l: 2,
        y: [0, 1, 4],
    },
    SysTerm {
        coeff: 1,
        k: 0,
        l: 2,
        y: [0, 0, 3],
    },
    SysTerm {
        coeff: -3,
        k: 0,
        l: 1,
        y: [0, 1, 2],
    },
    SysTerm {
        coeff: 1,
        k: 0,
        l: 1,
        y: [0, 0, 3],
    },
    SysTerm {
        coeff: 1,
        k: 0,
        l: 1,
        y: [0, 0, 1],
    },
    SysTerm {
        coeff: -1,
        k: 0,
        l: 0,
        y: [0, 1, 0],
    },
    SysTerm {
        coeff: 1,
        k: 0,
        l: 0,
        y: [0, 0, 1],
    },
];
pub(super) const G3_TERMS: &[SysTerm] = &[
    SysTerm {
        coeff: 12,
        k: 2,
        l: 0,
        y: [0, 2, 0],
    },
    SysTerm {
        coeff: 8,
        k: 2,
        l: 0,
        y: [0, 1, 1],
    },
    SysTerm {
        coeff: -24,
        k: 2,
        l: 0,
        y: [0, 1, 0],
    },
    SysTerm {
        coeff: 4,
        k: 1,
        l: 1,
        y: [0, 2, 2],
    },
    SysTerm {
        coeff: 6,
        k: 1,
        l: 1,
        y: [0, 2, 0],
    },
    SysTerm {
        coeff: 2,
        k: 1,
        l: 1,
        y: [0, 1, 3],
    },
    SysTerm {
        coeff: -8,
        k: 1,
        l: 1,
        y: [0, 1, 2],
    },
    SysTerm {
        coeff: -12,
        k: 1,
        l: 1,
        y: [0, 1, 0],
    },
    SysTerm {
        coeff: 6,
        k: 1,
        l: 1,
        y: [0, 0, 0],
    },
    SysTerm {
        coeff: 7,
        k: 1,
        l: 0,
        y: [0, 2, 0],
    },
    SysTerm {
        coeff: 5,
        k: 1,
        l: 0,
        y: [0, 1, 1],
    },
    SysTerm {
        coeff: -20,
        k: 1,
        l: 0,
        y: [0, 1, 0],
    },
    SysTerm {
        coeff: 6,
        k: 1,
        l: 0,
        y: [0, 0, 0],
    },
    SysTerm {
        coeff: 2,
        k: 0,
        l: 2,
        y: [0, 2, 2],
    },
    SysTerm {
        coeff: -4,
        k: 0,
        l: 2,
        y: [0, 1, 2],
    },
    SysTerm {
        coeff: 2,
        k: 0,
        l: 2,
        y: [0, 0, 2],
    },
    SysTerm {
        coeff: 1,
        k: 0,
        l: 1,
        y: [0, 2, 2],
    },
    SysTerm {
        coeff: 2,
        k: 0,
        l: 1,
        y: [0, 2, 0],
    },
    SysTerm {
        coeff: -4,
        k: 0,
        l: 1,
        y: [0, 1, 2],
    },
    SysTerm {
        coeff: -4,
        k: 0,
        l: 1,
        y: [0, 1, 0],
    },
    SysTerm {
        coeff: 2,
        k: 0,
        l: 1,
        y: [0, 0, 2],
    },
    SysTerm {
        coeff: 2,
        k: 0,
        l: 1,
        y: [0, 0, 0],
    },
    SysTerm {
        coeff: 1,
        k: 0,
        l: 0,
        y: [0, 2, 0],
    },
    SysTerm {
        coeff: 1,
        k: 0,
        l: 0,
        y: [0, 1, 1],
    },
    SysTerm {
        coeff: -4,
        k: 0,
        l: 0,
        y: [0, 1, 0],
    },
    SysTerm {
        coeff: 2,
        k: 0,
        l: 0,
        y: [0, 0, 0],
    },
];
