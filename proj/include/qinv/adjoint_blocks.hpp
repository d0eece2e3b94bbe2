// Sparse entry tables for the graded adjoint-operator blocks K02, K10, K21
// and the Strassen 9x9 matrix. Each entry places num/den * a[flat] at
// (row, col) of its block; all other positions are zero.
// Mirrored by data/adjoint_blocks.csv; integrity-checked by the verify suite.

#pragma once

#include <cstdint>

namespace qinv::detail {

struct BlockEntry {
    std::uint8_t row;
    std::uint8_t col;
    std::int8_t  num;
    std::uint8_t den;
    std::uint8_t flat;  // 9*i + 3*j + k
};

inline constexpr BlockEntry k02_entries[] = {
    {0,0,-1,3,26}, {0,1,1,3,25}, {0,2,-1,3,24}, {0,3,1,3,23}, {0,4,-1,3,22}, {0,5,1,3,21},
    {0,6,-1,3,20}, {0,7,1,3,19}, {0,8,-1,3,18}, {0,9,1,3,17}, {0,10,-1,3,16}, {0,11,1,3,15},
    {0,12,-1,3,14}, {0,13,1,3,13}, {0,14,-1,3,12}, {0,15,1,3,11}, {0,16,-1,3,10}, {0,17,1,3,9},
    {0,18,2,3,8}, {0,19,-2,3,7}, {0,20,2,3,6}, {0,21,-2,3,5}, {0,22,2,3,4}, {0,23,-2,3,3},
    {0,24,2,3,2}, {0,25,-2,3,1}, {0,26,2,3,0}, {1,0,-2,3,26}, {1,1,2,3,25}, {1,2,-2,3,24},
    {1,3,2,3,23}, {1,4,-2,3,22}, {1,5,2,3,21}, {1,6,-2,3,20}, {1,7,2,3,19}, {1,8,-2,3,18},
    {1,9,-1,3,17}, {1,10,1,3,16}, {1,11,-1,3,15}, {1,12,1,3,14}, {1,13,-1,3,13}, {1,14,1,3,12},
    {1,15,-1,3,11}, {1,16,1,3,10}, {1,17,-1,3,9}, {1,18,1,3,8}, {1,19,-1,3,7}, {1,20,1,3,6},
    {1,21,-1,3,5}, {1,22,1,3,4}, {1,23,-1,3,3}, {1,24,1,3,2}, {1,25,-1,3,1}, {1,26,1,3,0},
    {2,0,-1,3,26}, {2,1,1,3,25}, {2,2,-1,3,24}, {2,3,1,3,23}, {2,4,-1,3,22}, {2,5,1,3,21},
    {2,6,2,3,20}, {2,7,-2,3,19}, {2,8,2,3,18}, {2,9,1,3,17}, {2,10,-1,3,16}, {2,11,1,3,15},
    {2,12,-1,3,14}, {2,13,1,3,13}, {2,14,-1,3,12}, {2,15,-2,3,11}, {2,16,2,3,10}, {2,17,-2,3,9},
    {2,18,-1,3,8}, {2,19,1,3,7}, {2,20,-1,3,6}, {2,21,1,3,5}, {2,22,-1,3,4}, {2,23,1,3,3},
    {2,24,2,3,2}, {2,25,-2,3,1}, {2,26,2,3,0}, {3,0,-2,3,26}, {3,1,2,3,25}, {3,2,-2,3,24},
    {3,3,-1,3,23}, {3,4,1,3,22}, {3,5,-1,3,21}, {3,6,1,3,20}, {3,7,-1,3,19}, {3,8,1,3,18},
    {3,9,2,3,17}, {3,10,-2,3,16}, {3,11,2,3,15}, {3,12,1,3,14}, {3,13,-1,3,13}, {3,14,1,3,12},
    {3,15,-1,3,11}, {3,16,1,3,10}, {3,17,-1,3,9}, {3,18,-2,3,8}, {3,19,2,3,7}, {3,20,-2,3,6},
    {3,21,-1,3,5}, {3,22,1,3,4}, {3,23,-1,3,3}, {3,24,1,3,2}, {3,25,-1,3,1}, {3,26,1,3,0},
    {4,0,-1,3,26}, {4,1,1,3,25}, {4,2,2,3,24}, {4,3,1,3,23}, {4,4,-1,3,22}, {4,5,-2,3,21},
    {4,6,-1,3,20}, {4,7,1,3,19}, {4,8,2,3,18}, {4,9,1,3,17}, {4,10,-1,3,16}, {4,11,-2,3,15},
    {4,12,-1,3,14}, {4,13,1,3,13}, {4,14,2,3,12}, {4,15,1,3,11}, {4,16,-1,3,10}, {4,17,-2,3,9},
    {4,18,-1,3,8}, {4,19,1,3,7}, {4,20,2,3,6}, {4,21,1,3,5}, {4,22,-1,3,4}, {4,23,-2,3,3},
    {4,24,-1,3,2}, {4,25,1,3,1}, {4,26,2,3,0}, {5,0,-2,3,26}, {5,1,-1,3,25}, {5,2,1,3,24},
    {5,3,2,3,23}, {5,4,1,3,22}, {5,5,-1,3,21}, {5,6,-2,3,20}, {5,7,-1,3,19}, {5,8,1,3,18},
    {5,9,2,3,17}, {5,10,1,3,16}, {5,11,-1,3,15}, {5,12,-2,3,14}, {5,13,-1,3,13}, {5,14,1,3,12},
    {5,15,2,3,11}, {5,16,1,3,10}, {5,17,-1,3,9}, {5,18,-2,3,8}, {5,19,-1,3,7}, {5,20,1,3,6},
    {5,21,2,3,5}, {5,22,1,3,4}, {5,23,-1,3,3}, {5,24,-2,3,2}, {5,25,-1,3,1}, {5,26,1,3,0},
    {6,9,-1,1,8}, {6,10,1,1,7}, {6,11,-1,1,6}, {6,12,1,1,5}, {6,13,-1,1,4}, {6,14,1,1,3},
    {6,15,-1,1,2}, {6,16,1,1,1}, {6,17,-1,1,0}, {7,0,1,1,8}, {7,1,-1,1,7}, {7,2,1,1,6},
    {7,3,-1,1,5}, {7,4,1,1,4}, {7,5,-1,1,3}, {7,6,1,1,2}, {7,7,-1,1,1}, {7,8,1,1,0},
    {8,0,1,1,17}, {8,1,-1,1,16}, {8,2,1,1,15}, {8,3,-1,1,14}, {8,4,1,1,13}, {8,5,-1,1,12},
    {8,6,1,1,11}, {8,7,-1,1,10}, {8,8,1,1,9}, {9,3,-1,1,20}, {9,4,1,1,19}, {9,5,-1,1,18},
    {9,12,1,1,11}, {9,13,-1,1,10}, {9,14,1,1,9}, {9,21,-1,1,2}, {9,22,1,1,1}, {9,23,-1,1,0},
    {10,0,1,1,20}, {10,1,-1,1,19}, {10,2,1,1,18}, {10,9,-1,1,11}, {10,10,1,1,10}, {10,11,-1,1,9},
    {10,18,1,1,2}, {10,19,-1,1,1}, {10,20,1,1,0}, {11,0,1,1,23}, {11,1,-1,1,22}, {11,2,1,1,21},
    {11,9,-1,1,14}, {11,10,1,1,13}, {11,11,-1,1,12}, {11,18,1,1,5}, {11,19,-1,1,4}, {11,20,1,1,3},
    {12,1,-1,1,24}, {12,4,1,1,21}, {12,7,-1,1,18}, {12,10,1,1,15}, {12,13,-1,1,12}, {12,16,1,1,9},
    {12,19,-1,1,6}, {12,22,1,1,3}, {12,25,-1,1,0}, {13,0,1,1,24}, {13,3,-1,1,21}, {13,6,1,1,18},
    {13,9,-1,1,15}, {13,12,1,1,12}, {13,15,-1,1,9}, {13,18,1,1,6}, {13,21,-1,1,3}, {13,24,1,1,0},
    {14,0,1,1,25}, {14,3,-1,1,22}, {14,6,1,1,19}, {14,9,-1,1,16}, {14,12,1,1,13}, {14,15,-1,1,10},
    {14,18,1,1,7}, {14,21,-1,1,4}, {14,24,1,1,1}, {15,18,1,1,17}, {15,19,-1,1,16}, {15,20,1,1,15},
    {15,21,-1,1,14}, {15,22,1,1,13}, {15,23,-1,1,12}, {15,24,1,1,11}, {15,25,-1,1,10}, {15,26,1,1,9},
    {16,18,1,1,26}, {16,19,-1,1,25}, {16,20,1,1,24}, {16,21,-1,1,23}, {16,22,1,1,22}, {16,23,-1,1,21},
    {16,24,1,1,20}, {16,25,-1,1,19}, {16,26,1,1,18}, {17,9,-1,1,26}, {17,10,1,1,25}, {17,11,-1,1,24},
    {17,12,1,1,23}, {17,13,-1,1,22}, {17,14,1,1,21}, {17,15,-1,1,20}, {17,16,1,1,19}, {17,17,-1,1,18},
    {18,6,1,1,23}, {18,7,-1,1,22}, {18,8,1,1,21}, {18,15,-1,1,14}, {18,16,1,1,13}, {18,17,-1,1,12},
    {18,24,1,1,5}, {18,25,-1,1,4}, {18,26,1,1,3}, {19,6,1,1,26}, {19,7,-1,1,25}, {19,8,1,1,24},
    {19,15,-1,1,17}, {19,16,1,1,16}, {19,17,-1,1,15}, {19,24,1,1,8}, {19,25,-1,1,7}, {19,26,1,1,6},
    {20,3,-1,1,26}, {20,4,1,1,25}, {20,5,-1,1,24}, {20,12,1,1,17}, {20,13,-1,1,16}, {20,14,1,1,15},
    {20,21,-1,1,8}, {20,22,1,1,7}, {20,23,-1,1,6}, {21,2,1,1,25}, {21,5,-1,1,22}, {21,8,1,1,19},
    {21,11,-1,1,16}, {21,14,1,1,13}, {21,17,-1,1,10}, {21,20,1,1,7}, {21,23,-1,1,4}, {21,26,1,1,1},
    {22,2,1,1,26}, {22,5,-1,1,23}, {22,8,1,1,20}, {22,11,-1,1,17}, {22,14,1,1,14}, {22,17,-1,1,11},
    {22,20,1,1,8}, {22,23,-1,1,5}, {22,26,1,1,2}, {23,1,-1,1,26}, {23,4,1,1,23}, {23,7,-1,1,20},
    {23,10,1,1,17}, {23,13,-1,1,14}, {23,16,1,1,11}, {23,19,-1,1,8}, {23,22,1,1,5}, {23,25,-1,1,2},
};

inline constexpr BlockEntry k10_entries[] = {
    {0,0,-1,1,0}, {0,2,-1,1,0}, {0,4,-1,1,0}, {0,6,-1,1,9}, {0,7,-1,1,18}, {0,9,-1,1,3},
    {0,10,-1,1,6}, {0,12,-1,1,1}, {0,13,-1,1,2}, {1,0,-1,1,1}, {1,2,-1,1,1}, {1,4,1,1,1},
    {1,5,-1,1,1}, {1,6,-1,1,10}, {1,7,-1,1,19}, {1,9,-1,1,4}, {1,10,-1,1,7}, {1,14,-1,1,2},
    {1,21,-1,1,0}, {2,0,-1,1,2}, {2,2,-1,1,2}, {2,5,1,1,2}, {2,6,-1,1,11}, {2,7,-1,1,20},
    {2,9,-1,1,5}, {2,10,-1,1,8}, {2,22,-1,1,0}, {2,23,-1,1,1}, {3,0,-1,1,3}, {3,2,1,1,3},
    {3,3,-1,1,3}, {3,4,-1,1,3}, {3,6,-1,1,12}, {3,7,-1,1,21}, {3,11,-1,1,6}, {3,12,-1,1,4},
    {3,13,-1,1,5}, {3,18,-1,1,0}, {4,0,-1,1,4}, {4,2,1,1,4}, {4,3,-1,1,4}, {4,4,1,1,4},
    {4,5,-1,1,4}, {4,6,-1,1,13}, {4,7,-1,1,22}, {4,11,-1,1,7}, {4,14,-1,1,5}, {4,18,-1,1,1},
    {4,21,-1,1,3}, {5,0,-1,1,5}, {5,2,1,1,5}, {5,3,-1,1,5}, {5,5,1,1,5}, {5,6,-1,1,14},
    {5,7,-1,1,23}, {5,11,-1,1,8}, {5,18,-1,1,2}, {5,22,-1,1,3}, {5,23,-1,1,4}, {6,0,-1,1,6},
    {6,3,1,1,6}, {6,4,-1,1,6}, {6,6,-1,1,15}, {6,7,-1,1,24}, {6,12,-1,1,7}, {6,13,-1,1,8},
    {6,19,-1,1,0}, {6,20,-1,1,3}, {7,0,-1,1,7}, {7,3,1,1,7}, {7,4,1,1,7}, {7,5,-1,1,7},
    {7,6,-1,1,16}, {7,7,-1,1,25}, {7,14,-1,1,8}, {7,19,-1,1,1}, {7,20,-1,1,4}, {7,21,-1,1,6},
    {8,0,-1,1,8}, {8,3,1,1,8}, {8,5,1,1,8}, {8,6,-1,1,17}, {8,7,-1,1,26}, {8,19,-1,1,2},
    {8,20,-1,1,5}, {8,22,-1,1,6}, {8,23,-1,1,7}, {9,0,1,1,9}, {9,1,-1,1,9}, {9,2,-1,1,9},
    {9,4,-1,1,9}, {9,8,-1,1,18}, {9,9,-1,1,12}, {9,10,-1,1,15}, {9,12,-1,1,10}, {9,13,-1,1,11},
    {9,15,-1,1,0}, {10,0,1,1,10}, {10,1,-1,1,10}, {10,2,-1,1,10}, {10,4,1,1,10}, {10,5,-1,1,10},
    {10,8,-1,1,19}, {10,9,-1,1,13}, {10,10,-1,1,16}, {10,14,-1,1,11}, {10,15,-1,1,1}, {10,21,-1,1,9},
    {11,0,1,1,11}, {11,1,-1,1,11}, {11,2,-1,1,11}, {11,5,1,1,11}, {11,8,-1,1,20}, {11,9,-1,1,14},
    {11,10,-1,1,17}, {11,15,-1,1,2}, {11,22,-1,1,9}, {11,23,-1,1,10}, {12,0,1,1,12}, {12,1,-1,1,12},
    {12,2,1,1,12}, {12,3,-1,1,12}, {12,4,-1,1,12}, {12,8,-1,1,21}, {12,11,-1,1,15}, {12,12,-1,1,13},
    {12,13,-1,1,14}, {12,15,-1,1,3}, {12,18,-1,1,9}, {13,0,1,1,13}, {13,1,-1,1,13}, {13,2,1,1,13},
    {13,3,-1,1,13}, {13,4,1,1,13}, {13,5,-1,1,13}, {13,8,-1,1,22}, {13,11,-1,1,16}, {13,14,-1,1,14},
    {13,15,-1,1,4}, {13,18,-1,1,10}, {13,21,-1,1,12}, {14,0,1,1,14}, {14,1,-1,1,14}, {14,2,1,1,14},
    {14,3,-1,1,14}, {14,5,1,1,14}, {14,8,-1,1,23}, {14,11,-1,1,17}, {14,15,-1,1,5}, {14,18,-1,1,11},
    {14,22,-1,1,12}, {14,23,-1,1,13}, {15,0,1,1,15}, {15,1,-1,1,15}, {15,3,1,1,15}, {15,4,-1,1,15},
    {15,8,-1,1,24}, {15,12,-1,1,16}, {15,13,-1,1,17}, {15,15,-1,1,6}, {15,19,-1,1,9}, {15,20,-1,1,12},
    {16,0,1,1,16}, {16,1,-1,1,16}, {16,3,1,1,16}, {16,4,1,1,16}, {16,5,-1,1,16}, {16,8,-1,1,25},
    {16,14,-1,1,17}, {16,15,-1,1,7}, {16,19,-1,1,10}, {16,20,-1,1,13}, {16,21,-1,1,15}, {17,0,1,1,17},
    {17,1,-1,1,17}, {17,3,1,1,17}, {17,5,1,1,17}, {17,8,-1,1,26}, {17,15,-1,1,8}, {17,19,-1,1,11},
    {17,20,-1,1,14}, {17,22,-1,1,15}, {17,23,-1,1,16}, {18,1,1,1,18}, {18,2,-1,1,18}, {18,4,-1,1,18},
    {18,9,-1,1,21}, {18,10,-1,1,24}, {18,12,-1,1,19}, {18,13,-1,1,20}, {18,16,-1,1,0}, {18,17,-1,1,9},
    {19,1,1,1,19}, {19,2,-1,1,19}, {19,4,1,1,19}, {19,5,-1,1,19}, {19,9,-1,1,22}, {19,10,-1,1,25},
    {19,14,-1,1,20}, {19,16,-1,1,1}, {19,17,-1,1,10}, {19,21,-1,1,18}, {20,1,1,1,20}, {20,2,-1,1,20},
    {20,5,1,1,20}, {20,9,-1,1,23}, {20,10,-1,1,26}, {20,16,-1,1,2}, {20,17,-1,1,11}, {20,22,-1,1,18},
    {20,23,-1,1,19}, {21,1,1,1,21}, {21,2,1,1,21}, {21,3,-1,1,21}, {21,4,-1,1,21}, {21,11,-1,1,24},
    {21,12,-1,1,22}, {21,13,-1,1,23}, {21,16,-1,1,3}, {21,17,-1,1,12}, {21,18,-1,1,18}, {22,1,1,1,22},
    {22,2,1,1,22}, {22,3,-1,1,22}, {22,4,1,1,22}, {22,5,-1,1,22}, {22,11,-1,1,25}, {22,14,-1,1,23},
    {22,16,-1,1,4}, {22,17,-1,1,13}, {22,18,-1,1,19}, {22,21,-1,1,21}, {23,1,1,1,23}, {23,2,1,1,23},
    {23,3,-1,1,23}, {23,5,1,1,23}, {23,11,-1,1,26}, {23,16,-1,1,5}, {23,17,-1,1,14}, {23,18,-1,1,20},
    {23,22,-1,1,21}, {23,23,-1,1,22}, {24,1,1,1,24}, {24,3,1,1,24}, {24,4,-1,1,24}, {24,12,-1,1,25},
    {24,13,-1,1,26}, {24,16,-1,1,6}, {24,17,-1,1,15}, {24,19,-1,1,18}, {24,20,-1,1,21}, {25,1,1,1,25},
    {25,3,1,1,25}, {25,4,1,1,25}, {25,5,-1,1,25}, {25,14,-1,1,26}, {25,16,-1,1,7}, {25,17,-1,1,16},
    {25,19,-1,1,19}, {25,20,-1,1,22}, {25,21,-1,1,24}, {26,1,1,1,26}, {26,3,1,1,26}, {26,5,1,1,26},
    {26,16,-1,1,8}, {26,17,-1,1,17}, {26,19,-1,1,20}, {26,20,-1,1,23}, {26,22,-1,1,24}, {26,23,-1,1,25},
};

inline constexpr BlockEntry k21_entries[] = {
    {0,0,1,1,13}, {0,1,-1,1,12}, {0,3,-1,1,10}, {0,4,1,1,9}, {0,9,-1,1,4}, {0,10,1,1,3},
    {0,12,1,1,1}, {0,13,-1,1,0}, {1,0,1,1,14}, {1,2,-1,1,12}, {1,3,-1,1,11}, {1,5,1,1,9},
    {1,9,-1,1,5}, {1,11,1,1,3}, {1,12,1,1,2}, {1,14,-1,1,0}, {2,1,1,1,14}, {2,2,-1,1,13},
    {2,4,-1,1,11}, {2,5,1,1,10}, {2,10,-1,1,5}, {2,11,1,1,4}, {2,13,1,1,2}, {2,14,-1,1,1},
    {3,0,1,1,16}, {3,1,-1,1,15}, {3,6,-1,1,10}, {3,7,1,1,9}, {3,9,-1,1,7}, {3,10,1,1,6},
    {3,15,1,1,1}, {3,16,-1,1,0}, {4,0,1,1,17}, {4,2,-1,1,15}, {4,6,-1,1,11}, {4,8,1,1,9},
    {4,9,-1,1,8}, {4,11,1,1,6}, {4,15,1,1,2}, {4,17,-1,1,0}, {5,1,1,1,17}, {5,2,-1,1,16},
    {5,7,-1,1,11}, {5,8,1,1,10}, {5,10,-1,1,8}, {5,11,1,1,7}, {5,16,1,1,2}, {5,17,-1,1,1},
    {6,3,1,1,16}, {6,4,-1,1,15}, {6,6,-1,1,13}, {6,7,1,1,12}, {6,12,-1,1,7}, {6,13,1,1,6},
    {6,15,1,1,4}, {6,16,-1,1,3}, {7,3,1,1,17}, {7,5,-1,1,15}, {7,6,-1,1,14}, {7,8,1,1,12},
    {7,12,-1,1,8}, {7,14,1,1,6}, {7,15,1,1,5}, {7,17,-1,1,3}, {8,4,1,1,17}, {8,5,-1,1,16},
    {8,7,-1,1,14}, {8,8,1,1,13}, {8,13,-1,1,8}, {8,14,1,1,7}, {8,16,1,1,5}, {8,17,-1,1,4},
    {9,0,1,1,22}, {9,1,-1,1,21}, {9,3,-1,1,19}, {9,4,1,1,18}, {9,18,-1,1,4}, {9,19,1,1,3},
    {9,21,1,1,1}, {9,22,-1,1,0}, {10,0,1,1,23}, {10,2,-1,1,21}, {10,3,-1,1,20}, {10,5,1,1,18},
    {10,18,-1,1,5}, {10,20,1,1,3}, {10,21,1,1,2}, {10,23,-1,1,0}, {11,1,1,1,23}, {11,2,-1,1,22},
    {11,4,-1,1,20}, {11,5,1,1,19}, {11,19,-1,1,5}, {11,20,1,1,4}, {11,22,1,1,2}, {11,23,-1,1,1},
    {12,0,1,1,25}, {12,1,-1,1,24}, {12,6,-1,1,19}, {12,7,1,1,18}, {12,18,-1,1,7}, {12,19,1,1,6},
    {12,24,1,1,1}, {12,25,-1,1,0}, {13,0,1,1,26}, {13,2,-1,1,24}, {13,6,-1,1,20}, {13,8,1,1,18},
    {13,18,-1,1,8}, {13,20,1,1,6}, {13,24,1,1,2}, {13,26,-1,1,0}, {14,1,1,1,26}, {14,2,-1,1,25},
    {14,7,-1,1,20}, {14,8,1,1,19}, {14,19,-1,1,8}, {14,20,1,1,7}, {14,25,1,1,2}, {14,26,-1,1,1},
    {15,3,1,1,25}, {15,4,-1,1,24}, {15,6,-1,1,22}, {15,7,1,1,21}, {15,21,-1,1,7}, {15,22,1,1,6},
    {15,24,1,1,4}, {15,25,-1,1,3}, {16,3,1,1,26}, {16,5,-1,1,24}, {16,6,-1,1,23}, {16,8,1,1,21},
    {16,21,-1,1,8}, {16,23,1,1,6}, {16,24,1,1,5}, {16,26,-1,1,3}, {17,4,1,1,26}, {17,5,-1,1,25},
    {17,7,-1,1,23}, {17,8,1,1,22}, {17,22,-1,1,8}, {17,23,1,1,7}, {17,25,1,1,5}, {17,26,-1,1,4},
    {18,9,1,1,22}, {18,10,-1,1,21}, {18,12,-1,1,19}, {18,13,1,1,18}, {18,18,-1,1,13}, {18,19,1,1,12},
    {18,21,1,1,10}, {18,22,-1,1,9}, {19,9,1,1,23}, {19,11,-1,1,21}, {19,12,-1,1,20}, {19,14,1,1,18},
    {19,18,-1,1,14}, {19,20,1,1,12}, {19,21,1,1,11}, {19,23,-1,1,9}, {20,10,1,1,23}, {20,11,-1,1,22},
    {20,13,-1,1,20}, {20,14,1,1,19}, {20,19,-1,1,14}, {20,20,1,1,13}, {20,22,1,1,11}, {20,23,-1,1,10},
    {21,9,1,1,25}, {21,10,-1,1,24}, {21,15,-1,1,19}, {21,16,1,1,18}, {21,18,-1,1,16}, {21,19,1,1,15},
    {21,24,1,1,10}, {21,25,-1,1,9}, {22,9,1,1,26}, {22,11,-1,1,24}, {22,15,-1,1,20}, {22,17,1,1,18},
    {22,18,-1,1,17}, {22,20,1,1,15}, {22,24,1,1,11}, {22,26,-1,1,9}, {23,10,1,1,26}, {23,11,-1,1,25},
    {23,16,-1,1,20}, {23,17,1,1,19}, {23,19,-1,1,17}, {23,20,1,1,16}, {23,25,1,1,11}, {23,26,-1,1,10},
    {24,12,1,1,25}, {24,13,-1,1,24}, {24,15,-1,1,22}, {24,16,1,1,21}, {24,21,-1,1,16}, {24,22,1,1,15},
    {24,24,1,1,13}, {24,25,-1,1,12}, {25,12,1,1,26}, {25,14,-1,1,24}, {25,15,-1,1,23}, {25,17,1,1,21},
    {25,21,-1,1,17}, {25,23,1,1,15}, {25,24,1,1,14}, {25,26,-1,1,12}, {26,13,1,1,26}, {26,14,-1,1,25},
    {26,16,-1,1,23}, {26,17,1,1,22}, {26,22,-1,1,17}, {26,23,1,1,16}, {26,25,1,1,14}, {26,26,-1,1,13},
};

inline constexpr BlockEntry strassen_entries[] = {
    {0,3,-1,1,18}, {0,4,-1,1,19}, {0,5,-1,1,20}, {0,6,1,1,9}, {0,7,1,1,10}, {0,8,1,1,11},
    {1,3,-1,1,21}, {1,4,-1,1,22}, {1,5,-1,1,23}, {1,6,1,1,12}, {1,7,1,1,13}, {1,8,1,1,14},
    {2,3,-1,1,24}, {2,4,-1,1,25}, {2,5,-1,1,26}, {2,6,1,1,15}, {2,7,1,1,16}, {2,8,1,1,17},
    {3,0,1,1,18}, {3,1,1,1,19}, {3,2,1,1,20}, {3,6,-1,1,0}, {3,7,-1,1,1}, {3,8,-1,1,2},
    {4,0,1,1,21}, {4,1,1,1,22}, {4,2,1,1,23}, {4,6,-1,1,3}, {4,7,-1,1,4}, {4,8,-1,1,5},
    {5,0,1,1,24}, {5,1,1,1,25}, {5,2,1,1,26}, {5,6,-1,1,6}, {5,7,-1,1,7}, {5,8,-1,1,8},
    {6,0,-1,1,9}, {6,1,-1,1,10}, {6,2,-1,1,11}, {6,3,1,1,0}, {6,4,1,1,1}, {6,5,1,1,2},
    {7,0,-1,1,12}, {7,1,-1,1,13}, {7,2,-1,1,14}, {7,3,1,1,3}, {7,4,1,1,4}, {7,5,1,1,5},
    {8,0,-1,1,15}, {8,1,-1,1,16}, {8,2,-1,1,17}, {8,3,1,1,6}, {8,4,1,1,7}, {8,5,1,1,8},
};

}  // namespace qinv::detail
