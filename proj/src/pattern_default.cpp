#include "latch/pattern.hpp"

namespace latch {

namespace {

// Trained triplet table (512 bits, 8x8 patches, 7x7 mask), frozen from
// the synthetic multi-view training run. Six values per bit:
// anchor x, y; companion1 x, y; companion2 x, y.
constexpr short kDefaultTriplets[512][6] = {
    {28, 32, 37, 45, 18, 20},
    {29, 25, 25, 39, 34, 12},
    {27, 32, 16, 34, 32, 21},
    {28, 5, 28, 26, 6, 31},
    {27, 33, 24, 48, 41, 29},
    {0, 29, 53, 32, 27, 33},
    {22, 27, 40, 33, 19, 7},
    {9, 28, 29, 30, 27, 47},
    {39, 26, 35, 9, 28, 28},
    {2, 27, 30, 42, 30, 11},
    {40, 24, 27, 40, 12, 21},
    {38, 42, 9, 7, 25, 24},
    {39, 31, 54, 30, 21, 32},
    {30, 46, 22, 30, 39, 18},
    {27, 16, 40, 19, 25, 30},
    {37, 21, 46, 43, 28, 31},
    {53, 24, 19, 13, 23, 30},
    {28, 56, 47, 34, 28, 21},
    {15, 19, 36, 29, 36, 3},
    {45, 26, 34, 52, 31, 26},
    {36, 13, 39, 33, 15, 32},
    {13, 43, 23, 29, 38, 40},
    {18, 29, 35, 26, 4, 36},
    {16, 51, 28, 4, 29, 31},
    {6, 10, 25, 25, 37, 28},
    {44, 32, 9, 48, 21, 34},
    {16, 48, 4, 23, 39, 28},
    {25, 19, 0, 23, 47, 38},
    {55, 53, 32, 21, 7, 28},
    {27, 42, 42, 53, 32, 23},
    {36, 42, 17, 10, 54, 31},
    {16, 38, 50, 19, 28, 20},
    {46, 6, 52, 34, 31, 20},
    {33, 4, 55, 25, 27, 44},
    {30, 10, 33, 55, 39, 26},
    {32, 53, 34, 30, 8, 42},
    {14, 40, 0, 54, 27, 28},
    {37, 35, 29, 24, 27, 29},
    {0, 53, 43, 15, 19, 39},
    {38, 26, 25, 14, 12, 41},
    {16, 20, 6, 8, 24, 33},
    {12, 20, 42, 38, 21, 38},
    {31, 15, 21, 22, 28, 0},
    {29, 34, 53, 43, 12, 40},
    {14, 4, 27, 39, 23, 23},
    {15, 45, 30, 35, 21, 21},
    {44, 46, 27, 45, 40, 27},
    {29, 41, 24, 28, 27, 55},
    {52, 51, 34, 30, 22, 17},
    {46, 37, 34, 3, 30, 51},
    {52, 11, 39, 26, 20, 15},
    {7, 9, 28, 7, 14, 26},
    {42, 19, 54, 9, 35, 31},
    {26, 19, 1, 51, 33, 40},
    {34, 15, 54, 19, 4, 55},
    {26, 0, 42, 49, 13, 25},
    {11, 4, 49, 11, 31, 21},
    {49, 30, 11, 18, 33, 13},
    {44, 47, 52, 19, 30, 32},
    {33, 19, 12, 31, 21, 56},
    {22, 26, 0, 2, 2, 46},
    {54, 20, 10, 35, 39, 44},
    {30, 22, 10, 19, 44, 16},
    {12, 15, 30, 19, 53, 54},
    {2, 39, 1, 5, 38, 22},
    {22, 51, 36, 20, 46, 6},
    {37, 45, 15, 27, 56, 51},
    {14, 26, 45, 11, 18, 51},
    {48, 27, 1, 1, 12, 27},
    {3, 56, 36, 33, 50, 51},
    {54, 3, 22, 32, 33, 19},
    {27, 53, 17, 13, 13, 28},
    {18, 13, 29, 30, 21, 30},
    {0, 12, 28, 36, 5, 53},
    {36, 2, 8, 13, 25, 56},
    {52, 32, 25, 27, 20, 32},
    {27, 32, 30, 10, 52, 5},
    {5, 9, 37, 50, 48, 21},
    {20, 26, 5, 20, 22, 13},
    {33, 44, 30, 19, 36, 24},
    {48, 7, 1, 4, 30, 34},
    {36, 46, 36, 8, 5, 52},
    {27, 4, 41, 39, 56, 54},
    {52, 17, 28, 44, 51, 50},
    {13, 4, 24, 50, 20, 37},
    {2, 41, 45, 5, 14, 23},
    {51, 54, 20, 28, 17, 50},
    {54, 35, 41, 30, 50, 56},
    {47, 14, 21, 55, 38, 36},
    {39, 17, 13, 4, 41, 40},
    {28, 41, 0, 27, 50, 0},
    {26, 32, 30, 30, 24, 28},
    {4, 55, 27, 15, 38, 24},
    {26, 45, 34, 36, 19, 54},
    {53, 3, 25, 28, 19, 42},
    {22, 27, 43, 55, 55, 23},
    {2, 3, 3, 28, 38, 33},
    {47, 28, 47, 3, 32, 14},
    {14, 14, 50, 13, 4, 37},
    {0, 39, 53, 43, 19, 10},
    {55, 42, 2, 11, 36, 40},
    {27, 18, 56, 42, 36, 3},
    {25, 42, 17, 29, 18, 29},
    {1, 48, 1, 19, 23, 46},
    {55, 4, 44, 28, 36, 43},
    {22, 22, 16, 22, 29, 31},
    {51, 6, 7, 49, 27, 5},
    {21, 40, 4, 37, 20, 53},
    {15, 32, 21, 43, 10, 14},
    {2, 39, 55, 8, 29, 56},
    {12, 6, 15, 46, 38, 22},
    {51, 17, 17, 21, 3, 21},
    {8, 28, 24, 1, 4, 54},
    {32, 10, 45, 3, 18, 45},
    {52, 3, 5, 37, 17, 34},
    {0, 3, 32, 12, 44, 40},
    {13, 11, 24, 20, 4, 5},
    {51, 55, 25, 16, 23, 7},
    {54, 52, 6, 7, 13, 16},
    {0, 7, 10, 42, 56, 30},
    {21, 37, 17, 41, 24, 29},
    {41, 30, 48, 38, 41, 17},
    {54, 0, 10, 19, 52, 56},
    {34, 37, 35, 4, 0, 6},
    {56, 56, 56, 1, 44, 21},
    {56, 30, 38, 20, 19, 0},
    {23, 1, 4, 50, 49, 36},
    {33, 56, 44, 34, 1, 1},
    {20, 44, 48, 40, 45, 13},
    {34, 56, 31, 41, 33, 18},
    {0, 24, 41, 27, 56, 9},
    {52, 49, 41, 2, 16, 30},
    {11, 33, 44, 46, 40, 43},
    {26, 2, 56, 2, 53, 46},
    {7, 15, 20, 1, 56, 24},
    {16, 1, 4, 22, 16, 39},
    {21, 24, 45, 38, 38, 41},
    {28, 1, 41, 31, 31, 17},
    {29, 3, 1, 55, 14, 37},
    {55, 11, 20, 17, 23, 1},
    {5, 22, 11, 2, 22, 16},
    {20, 43, 0, 16, 11, 19},
    {43, 47, 27, 32, 25, 32},
    {52, 48, 35, 35, 29, 27},
    {43, 32, 38, 46, 53, 47},
    {51, 42, 1, 40, 16, 44},
    {50, 37, 0, 54, 4, 25},
    {16, 19, 35, 56, 33, 44},
    {28, 31, 29, 20, 37, 4},
    {31, 51, 15, 43, 0, 53},
    {52, 45, 9, 40, 31, 56},
    {44, 56, 54, 40, 40, 36},
    {8, 55, 12, 4, 18, 13},
    {1, 4, 32, 11, 36, 1},
    {12, 21, 17, 29, 14, 32},
    {22, 55, 27, 8, 56, 13},
    {21, 21, 48, 3, 48, 18},
    {55, 28, 10, 44, 50, 10},
    {40, 3, 56, 3, 39, 19},
    {3, 32, 25, 26, 30, 27},
    {0, 54, 39, 16, 52, 9},
    {29, 56, 51, 52, 18, 4},
    {5, 50, 44, 41, 33, 52},
    {10, 43, 23, 32, 30, 26},
    {20, 21, 39, 22, 49, 26},
    {6, 13, 46, 35, 52, 37},
    {37, 31, 40, 46, 17, 53},
    {2, 39, 41, 7, 49, 21},
    {52, 25, 29, 31, 32, 29},
    {3, 55, 24, 9, 10, 14},
    {45, 53, 46, 15, 45, 27},
    {1, 1, 18, 19, 23, 32},
    {34, 18, 14, 11, 1, 6},
    {2, 52, 25, 30, 5, 35},
    {26, 30, 55, 55, 51, 48},
    {11, 22, 16, 15, 5, 14},
    {36, 45, 9, 22, 11, 36},
    {35, 25, 9, 49, 1, 55},
    {30, 41, 42, 25, 55, 23},
    {29, 5, 56, 22, 47, 21},
    {15, 54, 53, 30, 39, 48},
    {0, 16, 56, 49, 21, 54},
    {28, 30, 43, 27, 56, 36},
    {18, 37, 21, 12, 26, 15},
    {39, 1, 3, 27, 8, 27},
    {10, 4, 5, 35, 9, 34},
    {41, 51, 16, 55, 54, 4},
    {54, 15, 50, 35, 38, 8},
    {37, 46, 33, 52, 30, 43},
    {39, 42, 0, 18, 42, 55},
    {37, 2, 17, 23, 19, 28},
    {21, 8, 20, 18, 28, 12},
    {37, 32, 13, 9, 2, 27},
    {16, 46, 32, 14, 25, 53},
    {8, 37, 39, 4, 40, 10},
    {32, 34, 17, 40, 11, 39},
    {15, 17, 29, 52, 11, 54},
    {35, 7, 33, 15, 38, 1},
    {25, 15, 18, 12, 22, 40},
    {45, 19, 55, 24, 44, 9},
    {10, 36, 50, 37, 56, 37},
    {8, 4, 26, 10, 39, 17},
    {6, 22, 28, 39, 17, 35},
    {52, 1, 0, 28, 49, 16},
    {26, 48, 46, 27, 40, 33},
    {2, 46, 15, 36, 10, 56},
    {0, 25, 47, 45, 55, 53},
    {47, 42, 56, 52, 11, 53},
    {29, 25, 28, 11, 17, 2},
    {3, 36, 45, 41, 46, 26},
    {22, 14, 12, 9, 26, 0},
    {9, 2, 22, 45, 40, 52},
    {39, 0, 23, 10, 41, 16},
    {46, 0, 30, 9, 19, 2},
    {23, 22, 10, 40, 0, 41},
    {39, 20, 29, 18, 47, 21},
    {54, 30, 44, 24, 40, 14},
    {17, 32, 54, 1, 49, 7},
    {56, 22, 3, 2, 48, 55},
    {43, 31, 56, 13, 41, 4},
    {32, 12, 38, 17, 34, 8},
    {39, 34, 31, 3, 40, 22},
    {4, 12, 17, 51, 18, 12},
    {31, 17, 46, 17, 37, 24},
    {13, 32, 31, 18, 26, 15},
    {21, 38, 14, 14, 16, 4},
    {56, 18, 12, 44, 9, 56},
    {54, 46, 35, 37, 41, 37},
    {18, 29, 23, 21, 27, 10},
    {20, 3, 33, 42, 35, 6},
    {7, 33, 48, 28, 0, 45},
    {24, 27, 14, 56, 17, 48},
    {13, 45, 1, 43, 45, 45},
    {18, 18, 13, 32, 9, 38},
    {12, 33, 18, 23, 7, 28},
    {12, 56, 9, 33, 28, 52},
    {39, 18, 30, 8, 36, 22},
    {12, 33, 18, 37, 2, 40},
    {47, 35, 2, 16, 53, 23},
    {35, 28, 43, 33, 50, 18},
    {1, 1, 34, 1, 56, 7},
    {51, 13, 47, 1, 43, 13},
    {45, 54, 16, 4, 43, 8},
    {22, 43, 30, 39, 42, 41},
    {54, 8, 56, 27, 47, 33},
    {41, 7, 3, 33, 10, 49},
    {13, 49, 0, 5, 55, 1},
    {36, 13, 22, 56, 25, 51},
    {44, 8, 17, 46, 23, 56},
    {31, 47, 11, 0, 17, 6},
    {9, 50, 24, 43, 24, 45},
    {48, 20, 6, 56, 20, 54},
    {31, 54, 27, 48, 22, 53},
    {45, 19, 54, 18, 12, 14},
    {3, 45, 31, 56, 33, 50},
    {33, 27, 31, 50, 30, 55},
    {5, 32, 12, 46, 6, 52},
    {42, 38, 49, 36, 28, 56},
    {18, 0, 10, 13, 2, 10},
    {43, 31, 40, 30, 41, 27},
    {20, 31, 7, 41, 1, 31},
    {23, 49, 50, 49, 48, 40},
    {0, 18, 14, 15, 26, 26},
    {29, 2, 20, 9, 4, 42},
    {50, 0, 29, 18, 32, 11},
    {11, 53, 36, 49, 25, 45},
    {42, 53, 41, 0, 47, 11},
    {51, 40, 28, 0, 22, 10},
    {44, 24, 9, 25, 2, 34},
    {43, 56, 43, 45, 31, 55},
    {54, 40, 45, 37, 51, 29},
    {17, 55, 7, 33, 3, 31},
    {6, 6, 13, 19, 18, 21},
    {2, 29, 36, 12, 40, 14},
    {55, 10, 56, 41, 49, 23},
    {0, 19, 45, 29, 42, 19},
    {56, 29, 40, 54, 42, 46},
    {41, 7, 9, 2, 6, 13},
    {0, 30, 19, 56, 19, 50},
    {34, 47, 39, 41, 33, 51},
    {43, 18, 47, 39, 42, 54},
    {42, 54, 21, 56, 21, 50},
    {52, 32, 31, 15, 35, 14},
    {6, 33, 24, 30, 21, 32},
    {8, 27, 27, 5, 40, 0},
    {22, 2, 5, 28, 7, 0},
    {24, 15, 46, 11, 55, 8},
    {56, 22, 53, 0, 45, 2},
    {53, 55, 43, 11, 56, 19},
    {4, 25, 2, 13, 44, 51},
    {33, 7, 28, 0, 44, 10},
    {1, 10, 54, 3, 10, 16},
    {23, 56, 21, 42, 16, 29},
    {4, 30, 2, 9, 9, 17},
    {26, 44, 8, 43, 7, 49},
    {2, 54, 19, 6, 32, 2},
    {53, 54, 40, 48, 29, 40},
    {48, 27, 0, 1, 9, 2},
    {7, 46, 0, 44, 4, 41},
    {2, 46, 43, 53, 45, 56},
    {34, 13, 38, 12, 28, 12},
    {8, 5, 19, 12, 16, 2},
    {21, 6, 41, 52, 41, 56},
    {31, 1, 15, 45, 17, 46},
    {1, 1, 0, 55, 15, 55},
    {34, 40, 37, 43, 21, 38},
    {20, 56, 3, 52, 32, 49},
    {10, 0, 44, 42, 47, 41},
    {5, 47, 0, 17, 0, 9},
    {10, 32, 2, 32, 8, 7},
    {56, 37, 16, 2, 20, 4},
    {27, 27, 15, 25, 16, 26},
    {36, 4, 28, 16, 27, 24},
    {27, 49, 19, 40, 35, 52},
    {39, 27, 34, 29, 14, 34},
    {21, 55, 55, 56, 49, 51},
    {1, 7, 1, 44, 4, 40},
    {5, 53, 1, 17, 5, 27},
    {30, 10, 36, 16, 1, 12},
    {33, 31, 30, 29, 40, 39},
    {9, 54, 53, 1, 53, 10},
    {23, 25, 22, 23, 19, 27},
    {4, 22, 18, 39, 14, 28},
    {29, 39, 38, 42, 47, 32},
    {29, 31, 26, 54, 20, 50},
    {24, 47, 53, 48, 40, 55},
    {39, 38, 0, 56, 1, 53},
    {51, 12, 31, 21, 38, 18},
    {15, 2, 3, 6, 51, 36},
    {51, 30, 20, 31, 56, 38},
    {44, 0, 40, 52, 39, 50},
    {41, 37, 12, 32, 11, 31},
    {51, 40, 45, 23, 45, 31},
    {47, 9, 13, 51, 54, 3},
    {8, 47, 49, 20, 54, 23},
    {9, 54, 6, 1, 12, 3},
    {37, 39, 51, 27, 54, 20},
    {7, 27, 55, 54, 8, 38},
    {53, 50, 0, 19, 7, 16},
    {15, 24, 55, 8, 14, 14},
    {5, 19, 5, 51, 5, 45},
    {40, 55, 2, 36, 7, 39},
    {9, 17, 56, 44, 52, 55},
    {53, 0, 25, 56, 40, 0},
    {48, 27, 54, 24, 29, 45},
    {23, 38, 2, 8, 0, 6},
    {53, 55, 15, 19, 54, 43},
    {8, 38, 19, 51, 37, 55},
    {49, 1, 1, 18, 5, 32},
    {50, 41, 27, 44, 34, 44},
    {12, 21, 7, 18, 12, 46},
    {21, 4, 7, 19, 0, 26},
    {43, 25, 43, 40, 44, 42},
    {6, 18, 32, 0, 16, 13},
    {24, 39, 13, 36, 2, 37},
    {43, 40, 41, 56, 39, 51},
    {48, 49, 2, 10, 14, 2},
    {13, 36, 16, 27, 23, 18},
    {17, 0, 19, 9, 56, 54},
    {41, 47, 37, 32, 40, 35},
    {32, 27, 32, 33, 22, 35},
    {40, 1, 52, 46, 47, 48},
    {39, 14, 35, 19, 30, 40},
    {33, 12, 48, 36, 48, 34},
    {46, 0, 43, 10, 42, 30},
    {26, 19, 55, 22, 24, 14},
    {1, 27, 34, 17, 9, 23},
    {46, 39, 56, 10, 53, 11},
    {39, 5, 43, 1, 33, 0},
    {18, 49, 24, 0, 28, 4},
    {0, 40, 23, 49, 17, 47},
    {55, 21, 53, 33, 42, 36},
    {23, 41, 31, 40, 38, 26},
    {10, 44, 7, 54, 56, 9},
    {9, 44, 6, 47, 12, 40},
    {22, 9, 38, 9, 43, 4},
    {33, 3, 55, 2, 53, 6},
    {22, 14, 35, 18, 32, 17},
    {18, 8, 32, 17, 24, 15},
    {33, 46, 46, 0, 45, 2},
    {30, 0, 33, 47, 27, 49},
    {44, 41, 41, 35, 15, 29},
    {52, 21, 41, 6, 39, 0},
    {28, 35, 1, 34, 2, 31},
    {37, 4, 29, 52, 37, 11},
    {2, 10, 20, 4, 35, 5},
    {17, 32, 18, 26, 17, 21},
    {26, 45, 0, 20, 21, 39},
    {50, 52, 45, 47, 54, 55},
    {6, 5, 53, 19, 54, 32},
    {29, 41, 43, 40, 46, 41},
    {38, 44, 20, 55, 24, 53},
    {5, 45, 7, 1, 7, 6},
    {21, 44, 32, 10, 28, 11},
    {37, 52, 52, 47, 55, 48},
    {7, 35, 11, 9, 7, 16},
    {16, 0, 23, 2, 24, 15},
    {2, 1, 2, 51, 5, 10},
    {30, 29, 24, 29, 32, 28},
    {1, 3, 9, 8, 5, 15},
    {32, 55, 53, 28, 55, 31},
    {34, 41, 8, 32, 40, 38},
    {48, 31, 43, 27, 3, 43},
    {21, 31, 32, 55, 30, 56},
    {39, 4, 20, 5, 15, 3},
    {5, 55, 18, 2, 3, 46},
    {25, 2, 53, 13, 49, 7},
    {44, 28, 41, 25, 40, 36},
    {47, 12, 50, 19, 48, 18},
    {47, 51, 56, 50, 41, 13},
    {55, 13, 49, 53, 49, 55},
    {53, 22, 44, 16, 34, 12},
    {17, 16, 37, 49, 17, 10},
    {38, 52, 56, 12, 56, 10},
    {36, 13, 50, 21, 36, 17},
    {18, 22, 3, 15, 0, 16},
    {44, 27, 30, 32, 38, 32},
    {21, 33, 48, 2, 18, 37},
    {1, 56, 13, 56, 8, 51},
    {32, 18, 52, 43, 51, 44},
    {39, 31, 25, 27, 33, 32},
    {48, 23, 44, 22, 54, 27},
    {4, 18, 7, 27, 13, 29},
    {21, 29, 21, 36, 35, 51},
    {13, 20, 17, 18, 10, 23},
    {34, 16, 40, 8, 42, 4},
    {0, 38, 9, 18, 3, 27},
    {21, 32, 26, 3, 27, 2},
    {49, 27, 48, 32, 56, 18},
    {45, 8, 32, 2, 52, 12},
    {20, 0, 35, 4, 37, 7},
    {6, 23, 3, 22, 8, 31},
    {52, 36, 29, 54, 46, 45},
    {46, 17, 41, 17, 14, 43},
    {43, 16, 28, 0, 35, 11},
    {16, 28, 50, 47, 12, 29},
    {43, 5, 15, 29, 50, 8},
    {10, 46, 11, 40, 5, 35},
    {33, 16, 32, 27, 32, 24},
    {54, 38, 47, 40, 24, 15},
    {46, 40, 54, 6, 43, 47},
    {41, 27, 35, 25, 21, 26},
    {17, 11, 12, 18, 13, 22},
    {21, 43, 15, 42, 56, 14},
    {53, 32, 52, 8, 56, 20},
    {15, 29, 26, 25, 22, 25},
    {14, 51, 22, 51, 55, 56},
    {37, 52, 44, 43, 46, 36},
    {27, 18, 5, 3, 6, 1},
    {43, 38, 52, 35, 55, 36},
    {37, 7, 21, 12, 32, 10},
    {28, 22, 1, 36, 24, 24},
    {19, 19, 18, 12, 7, 2},
    {36, 30, 30, 36, 33, 31},
    {37, 13, 44, 26, 32, 11},
    {25, 47, 24, 41, 31, 32},
    {24, 33, 21, 38, 21, 43},
    {55, 5, 55, 9, 56, 9},
    {25, 13, 17, 17, 28, 11},
    {40, 26, 32, 17, 33, 18},
    {51, 51, 55, 53, 54, 55},
    {34, 44, 54, 5, 35, 39},
    {10, 53, 11, 18, 4, 55},
    {36, 2, 29, 2, 56, 56},
    {4, 23, 7, 12, 7, 0},
    {3, 35, 2, 30, 5, 34},
    {30, 40, 27, 43, 15, 36},
    {40, 40, 41, 51, 40, 37},
    {35, 19, 48, 26, 34, 22},
    {18, 52, 40, 34, 20, 46},
    {5, 49, 6, 29, 1, 39},
    {43, 53, 6, 55, 49, 48},
    {25, 51, 24, 55, 44, 47},
    {42, 6, 42, 0, 40, 4},
    {55, 24, 50, 22, 47, 39},
    {3, 43, 35, 16, 8, 48},
    {36, 37, 24, 52, 33, 36},
    {38, 54, 31, 42, 32, 46},
    {5, 45, 11, 4, 9, 41},
    {44, 13, 33, 16, 45, 10},
    {33, 2, 31, 7, 7, 19},
    {41, 28, 48, 24, 56, 23},
    {31, 38, 31, 30, 32, 40},
    {34, 34, 41, 29, 44, 27},
    {11, 42, 16, 45, 53, 27},
    {36, 38, 28, 26, 32, 34},
    {54, 52, 40, 52, 39, 51},
    {47, 29, 54, 30, 52, 31},
    {18, 19, 5, 23, 7, 22},
    {4, 14, 45, 20, 3, 8},
    {28, 13, 43, 24, 27, 16},
    {23, 18, 22, 21, 19, 23},
    {0, 29, 4, 34, 49, 23},
    {32, 0, 45, 1, 49, 1},
    {26, 31, 20, 14, 23, 28},
    {46, 20, 43, 26, 40, 35},
    {2, 36, 10, 38, 29, 34},
    {15, 25, 15, 28, 1, 18},
    {10, 46, 23, 46, 21, 47},
    {37, 52, 42, 54, 27, 51},
    {16, 7, 3, 2, 2, 0},
    {45, 26, 46, 21, 18, 8},
    {0, 1, 6, 9, 11, 15},
    {52, 21, 55, 34, 55, 40},
    {20, 32, 18, 29, 51, 13},
    {31, 55, 1, 24, 1, 27},
    {15, 39, 4, 24, 16, 35},
    {56, 45, 53, 38, 54, 20},
    {20, 19, 24, 15, 29, 4},
    {30, 51, 54, 19, 24, 50},
    {44, 10, 43, 16, 36, 29},
    {17, 46, 9, 53, 8, 55},
};

} // namespace

const TripletPattern& default_pattern() {
    static const TripletPattern pattern = [] {
        TripletPattern p;
        p.bit_count = 512;
        p.patch_size = 8;
        p.mask = WeightMask::seven_by_seven();
        p.triplets.reserve(512);
        for (const auto& t : kDefaultTriplets)
            p.triplets.push_back({t[0], t[1], t[2], t[3], t[4], t[5]});
        return p;
    }();
    return pattern;
}

} // namespace latch
