#pragma once

#include <array>
#include <string_view>

// Reference values printed in the source figures.
namespace markov::golden {

struct MarkovNumber {
    int a;
    int b;
    std::string_view m;
};

/// Every region value displayed on the Markov topograph figure.
inline constexpr std::array<MarkovNumber, 17> markov_numbers{{
    {0, 1, "1"},      {1, 1, "2"},      {1, 2, "5"},      {1, 3, "13"},     {2, 3, "29"},    {1, 4, "34"},
    {1, 5, "89"},     {3, 4, "169"},    {2, 5, "194"},    {3, 5, "433"},    {4, 5, "985"},   {2, 7, "1325"},
    {3, 7, "2897"},   {4, 7, "6466"},   {3, 8, "7561"},   {5, 7, "14701"},  {5, 8, "37666"},
}};

struct Weight {
    int i;
    int j;
    int c;
};

/// Weighted Newton polygon of M_{2/3}.
inline constexpr std::array<Weight, 10> weights_2_3{{
    {4, 0, 1}, {3, 1, 4}, {2, 2, 6}, {1, 3, 4}, {0, 4, 1},
    {3, 0, 2}, {2, 1, 5}, {1, 2, 4}, {0, 3, 1},
    {2, 0, 1},
}};

/// Weighted Newton polygon of M_{1/5}.
inline constexpr std::array<Weight, 16> weights_1_5{{
    {5, 0, 1}, {4, 1, 5}, {3, 2, 10}, {2, 3, 10}, {1, 4, 5}, {0, 5, 1},
    {4, 0, 4}, {3, 1, 12}, {2, 2, 12}, {1, 3, 4},
    {3, 0, 6}, {2, 1, 9}, {1, 2, 3},
    {2, 0, 4}, {1, 1, 2},
    {1, 0, 1},
}};

}  // namespace markov::golden
