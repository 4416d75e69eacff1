#pragma once

// Values exactly as printed in the published tables 1-9 for the 14 Price
// medallists: (table, row key, author, printed text). "-" marks a cell printed
// as a dash. Text is kept verbatim, stray characters included.

#include <string_view>

namespace citeidx::fixtures {

struct PrintedCell {
    int table;
    std::string_view row;
    std::string_view name;
    std::string_view text;
};

inline constexpr PrintedCell printed_cells[] = {
    {1, "g", "Leydesdorff", "145"},
    {1, "g", "Glänzel", "99"},
    {1, "g", "Moed", "86"},
    {1, "g", "Van Raan", "89"},
    {1, "g", "Rousseau", "79"},
    {1, "g", "Schubert", "85"},
    {1, "g", "Martin", "85"},
    {1, "g", "Narin", "68"},
    {1, "g", "Garfield", "106"},
    {1, "g", "Braun", "66"},
    {1, "g", "Small", "57"},
    {1, "g", "Egghe", "69"},
    {1, "g", "Ingwersen", "59"},
    {1, "g", "White", "28"},
    {1, "g_3", "Leydesdorff", "114"},
    {1, "g_3", "Glänzel", "76"},
    {1, "g_3", "Moed", "68"},
    {1, "g_3", "Van Raan", "70"},
    {1, "g_3", "Rousseau", "62"},
    {1, "g_3", "Schubert", "68"},
    {1, "g_3", "Martin", "70"},
    {1, "g_3", "Narin", "68"},
    {1, "g_3", "Garfield", "86"},
    {1, "g_3", "Braun", "51"},
    {1, "g_3", "Small", "57"},
    {1, "g_3", "Egghe", "54"},
    {1, "g_3", "Ingwersen", "46"},
    {1, "g_3", "White", "28"},
    {1, "g_4", "Leydesdorff", "96"},
    {1, "g_4", "Glänzel", "63"},
    {1, "g_4", "Moed", "57"},
    {1, "g_4", "Van Raan", "59"},
    {1, "g_4", "Rousseau", "52"},
    {1, "g_4", "Schubert", "58"},
    {1, "g_4", "Martin", "60"},
    {1, "g_4", "Narin", "59"},
    {1, "g_4", "Garfield", "74"},
    {1, "g_4", "Braun", "42"},
    {1, "g_4", "Small", "57"},
    {1, "g_4", "Egghe", "46"},
    {1, "g_4", "Ingwersen", "39"},
    {1, "g_4", "White", "28"},
    {1, "g_5", "Leydesdorff", "83"},
    {1, "g_5", "Glänzel", "-"},
    {1, "g_5", "Moed", "50"},
    {1, "g_5", "Van Raan", "52"},
    {1, "g_5", "Rousseau", "45"},
    {1, "g_5", "Schubert", "51"},
    {1, "g_5", "Martin", "54"},
    {1, "g_5", "Narin", "53"},
    {1, "g_5", "Garfield", "65"},
    {1, "g_5", "Braun", "37"},
    {1, "g_5", "Small", "54"},
    {1, "g_5", "Egghe", "41"},
    {1, "g_5", "Ingwersen", "34"},
    {1, "g_5", "White", "28"},
    {1, "g_6", "Leydesdorff", "-"},
    {1, "g_6", "Glänzel", "-"},
    {1, "g_6", "Moed", "-"},
    {1, "g_6", "Van Raan", "-"},
    {1, "g_6", "Rousseau", "-"},
    {1, "g_6", "Schubert", "46"},
    {1, "g_6", "Martin", "48"},
    {1, "g_6", "Narin", "48"},
    {1, "g_6", "Garfield", "60"},
    {1, "g_6", "Braun", "-"},
    {1, "g_6", "Small", "50"},
    {1, "g_6", "Egghe", "36"},
    {1, "g_6", "Ingwersen", "31"},
    {1, "g_6", "White", "27"},
    {1, "g_7", "Leydesdorff", "-"},
    {1, "g_7", "Glänzel", "-"},
    {1, "g_7", "Moed", "-"},
    {1, "g_7", "Van Raan", "-"},
    {1, "g_7", "Rousseau", "-"},
    {1, "g_7", "Schubert", "42"},
    {1, "g_7", "Martin", "45"},
    {1, "g_7", "Narin", "44"},
    {1, "g_7", "Garfield", "55"},
    {1, "g_7", "Braun", "-"},
    {1, "g_7", "Small", "46"},
    {1, "g_7", "Egghe", "33"},
    {1, "g_7", "Ingwersen", "28"},
    {1, "g_7", "White", "25"},
    {1, "g_8", "Leydesdorff", "-"},
    {1, "g_8", "Glänzel", "-"},
    {1, "g_8", "Moed", "-"},
    {1, "g_8", "Van Raan", "-"},
    {1, "g_8", "Rousseau", "-"},
    {1, "g_8", "Schubert", "-"},
    {1, "g_8", "Martin", "41"},
    {1, "g_8", "Narin", "42"},
    {1, "g_8", "Garfield", "51"},
    {1, "g_8", "Braun", "-"},
    {1, "g_8", "Small", "43"},
    {1, "g_8", "Egghe", "31"},
    {1, "g_8", "Ingwersen", "-"},
    {1, "g_8", "White", "23"},
    {1, "g_9", "Leydesdorff", "-"},
    {1, "g_9", "Glänzel", "-"},
    {1, "g_9", "Moed", "-"},
    {1, "g_9", "Van Raan", "-"},
    {1, "g_9", "Rousseau", "-"},
    {1, "g_9", "Schubert", "-"},
    {1, "g_9", "Martin", "39"},
    {1, "g_9", "Narin", "38"},
    {1, "g_9", "Garfield", "48"},
    {1, "g_9", "Braun", "-"},
    {1, "g_9", "Small", "40"},
    {1, "g_9", "Egghe", "-"},
    {1, "g_9", "Ingwersen", "-"},
    {1, "g_9", "White", "22"},
    {1, "h", "Leydesdorff", "79"},
    {1, "h", "Glänzel", "61"},
    {1, "h", "Moed", "49"},
    {1, "h", "Van Raan", "48"},
    {1, "h", "Rousseau", "43"},
    {1, "h", "Schubert", "42"},
    {1, "h", "Martin", "38"},
    {1, "h", "Narin", "38"},
    {1, "h", "Garfield", "37"},
    {1, "h", "Braun", "37"},
    {1, "h", "Small", "34"},
    {1, "h", "Egghe", "30"},
    {1, "h", "Ingwersen", "27"},
    {1, "h", "White", "19"},
    {1, "r", "Leydesdorff", "4"},
    {1, "r", "Glänzel", "3"},
    {1, "r", "Moed", "4"},
    {1, "r", "Van Raan", "4"},
    {1, "r", "Rousseau", "4"},
    {1, "r", "Schubert", "6"},
    {1, "r", "Martin", "8"},
    {1, "r", "Narin", "8"},
    {1, "r", "Garfield", "13"},
    {1, "r", "Braun", "4"},
    {1, "r", "Small", "11"},
    {1, "r", "Egghe", "7"},
    {1, "r", "Ingwersen", "6"},
    {1, "r", "White", "10"},
    {1, "c_h-h", "Leydesdorff", "0"},
    {1, "c_h-h", "Glänzel", "1"},
    {1, "c_h-h", "Moed", "0"},
    {1, "c_h-h", "Van Raan", "0"},
    {1, "c_h-h", "Rousseau", "0"},
    {1, "c_h-h", "Schubert", "0"},
    {1, "c_h-h", "Martin", "2"},
    {1, "c_h-h", "Narin", "0"},
    {1, "c_h-h", "Garfield", "2"},
    {1, "c_h-h", "Braun", "0"},
    {1, "c_h-h", "Small", "0"},
    {1, "c_h-h", "Egghe", "2"},
    {1, "c_h-h", "Ingwersen", "1"},
    {1, "c_h-h", "White", "1"},
    {1, "(c_h-h)/h", "Leydesdorff", "0"},
    {1, "(c_h-h)/h", "Glänzel", "0.017"},
    {1, "(c_h-h)/h", "Moed", "0"},
    {1, "(c_h-h)/h", "Van Raan", "0"},
    {1, "(c_h-h)/h", "Rousseau", "0"},
    {1, "(c_h-h)/h", "Schubert", "0"},
    {1, "(c_h-h)/h", "Martin", "0.053"},
    {1, "(c_h-h)/h", "Narin", "0"},
    {1, "(c_h-h)/h", "Garfield", "0.054"},
    {1, "(c_h-h)/h", "Braun", "0"},
    {1, "(c_h-h)/h", "Small", "0"},
    {1, "(c_h-h)/h", "Egghe", "0.067"},
    {1, "(c_h-h)/h", "Ingwersen", "0.037"},
    {1, "(c_h-h)/h", "White", "0.053"},
    {1, "l", "Leydesdorff", "4"},
    {1, "l", "Glänzel", "2"},
    {1, "l", "Moed", "1"},
    {1, "l", "Van Raan", "4"},
    {1, "l", "Rousseau", "2"},
    {1, "l", "Schubert", "0"},
    {1, "l", "Martin", "1"},
    {1, "l", "Narin", "0"},
    {1, "l", "Garfield", "1"},
    {1, "l", "Braun", "0"},
    {1, "l", "Small", "0"},
    {1, "l", "Egghe", "1"},
    {1, "l", "Ingwersen", "1"},
    {1, "l", "White", "1"},
    {1, "l/h", "Leydesdorff", "0.051"},
    {1, "l/h", "Glänzel", "0.033"},
    {1, "l/h", "Moed", "0.020"},
    {1, "l/h", "Van Raan", "0.083"},
    {1, "l/h", "Rousseau", "0.047"},
    {1, "l/h", "Schubert", "0.000"},
    {1, "l/h", "Martin", "0.026"},
    {1, "l/h", "Narin", "0"},
    {1, "l/h", "Garfield", "0.027"},
    {1, "l/h", "Braun", "0"},
    {1, "l/h", "Small", "0"},
    {1, "l/h", "Egghe", "0.033"},
    {1, "l/h", "Ingwersen", "0.037"},
    {1, "l/h", "White", "0.053"},
    {1, "h/g", "Leydesdorff", "0.546"},
    {1, "h/g", "Glänzel", "0.616"},
    {1, "h/g", "Moed", "0.570"},
    {1, "h/g", "Van Raan", "0.539"},
    {1, "h/g", "Rousseau", "0.544"},
    {1, "h/g", "Schubert", "0.494"},
    {1, "h/g", "Martin", "0.447"},
    {1, "h/g", "Narin", "0.559"},
    {1, "h/g", "Garfield", "0.350"},
    {1, "h/g", "Braun", "0.561"},
    {1, "h/g", "Small", "0.596"},
    {1, "h/g", "Egghe", "0.435"},
    {1, "h/g", "Ingwersen", "0.545"},
    {1, "h/g", "White", "0.679"},
    {1, "h*sqrt(r)/g", "Leydesdorff", "1.090"},
    {1, "h*sqrt(r)/g", "Glänzel", "1.067"},
    {1, "h*sqrt(r)/g", "Moed", "1.140"},
    {1, "h*sqrt(r)/g", "Van Raan", "1.079"},
    {1, "h*sqrt(r)/g", "Rousseau", "1.089"},
    {1, "h*sqrt(r)/g", "Schubert", "1.210"},
    {1, "h*sqrt(r)/g", "Martin", "1.264"},
    {1, "h*sqrt(r)/g", "Narin", "1.581"},
    {1, "h*sqrt(r)/g", "Garfield", "1.259"},
    {1, "h*sqrt(r)/g", "Braun", "1.121"},
    {1, "h*sqrt(r)/g", "Small", "1.978"},
    {1, "h*sqrt(r)/g", "Egghe", "1.150"},
    {1, "h*sqrt(r)/g", "Ingwersen", "1.121"},
    {1, "h*sqrt(r)/g", "White", "2.251"},
    {1, "h*sqrt(r-1)/g", "Leydesdorff", "0.944"},
    {1, "h*sqrt(r-1)/g", "Glänzel", "0.871"},
    {1, "h*sqrt(r-1)/g", "Moed", "0.986"},
    {1, "h*sqrt(r-1)/g", "Van Raan", "0.934"},
    {1, "h*sqrt(r-1)/g", "Rousseau", "0.943"},
    {1, "h*sqrt(r-1)/g", "Schubert", "1.1050"},
    {1, "h*sqrt(r-1)/g", "Martin", "1.183"},
    {1, "h*sqrt(r-1)/g", "Narin", "1.479"},
    {1, "h*sqrt(r-1)/g", "Garfield", "1.209"},
    {1, "h*sqrt(r-1)/g", "Braun", "0.971"},
    {1, "h*sqrt(r-1)/g", "Small", "1.886"},
    {1, "h*sqrt(r-1)/g", "Egghe", "1.065"},
    {1, "h*sqrt(r-1)/g", "Ingwersen", "1.023"},
    {1, "h*sqrt(r-1)/g", "White", "2.146"},
    {1, "H", "Leydesdorff", "158"},
    {1, "H", "Glänzel", "105.652"},
    {1, "H", "Moed", "98"},
    {1, "H", "Van Raan", "96"},
    {1, "H", "Rousseau", "86"},
    {1, "H", "Schubert", "102.879"},
    {1, "H", "Martin", "107.480"},
    {1, "g_bar", "Leydesdorff", "88.750"},
    {1, "g_bar", "Glänzel", "79.333"},
    {1, "g_bar", "Moed", "65.250"},
    {1, "g_bar", "Van Raan", "67.500"},
    {1, "g_bar", "Rousseau", "59.500"},
    {1, "g_bar", "Schubert", "58.333"},
    {1, "g_bar", "Martin", "55.250"},
    {1, "g_bar", "Narin", "52.500"},
    {1, "g_bar", "Garfield", "57.769"},
    {1, "g_bar", "Braun", "49"},
    {1, "g_bar", "Small", "46.545"},
    {1, "g_bar", "Egghe", "44.286"},
    {1, "g_bar", "Ingwersen", "39.500"},
    {1, "g_bar", "White", "25.000"},
    {1, "N", "Leydesdorff", "8053"},
    {1, "N", "Glänzel", "11766"},
    {1, "N", "Moed", "7606"},
    {1, "N", "Van Raan", "8308"},
    {1, "N", "Rousseau", "8053"},
    {1, "N", "Schubert", "7587"},
    {1, "N", "Martin", "7598"},
    {1, "N", "Narin", "7209"},
    {1, "N", "Garfield", "11515"},
    {1, "N", "Braun", "5680"},
    {1, "N", "Small", "7693"},
    {1, "N", "Egghe", "5640"},
    {1, "N", "Ingwersen", "3606"},
    {1, "N", "White", "2399"},
    {1, "N(h)", "Leydesdorff", "17360"},
    {1, "N(h)", "Glänzel", "8049"},
    {1, "N(h)", "Moed", "6351"},
    {1, "N(h)", "Van Raan", "6833"},
    {1, "N(h)", "Rousseau", "5203"},
    {1, "N(h)", "Schubert", "6359"},
    {1, "N(h)", "Martin", "7048"},
    {1, "N(h)", "Narin", "6823"},
    {1, "N(h)", "Garfield", "10509"},
    {1, "N(h)", "Braun", "3566"},
    {1, "N(h)", "Small", "7471"},
    {1, "N(h)", "Egghe", "3995"},
    {1, "N(h)", "Ingwersen", "2952"},
    {1, "N(h)", "White", "2332"},
    {1, "N(h)/h", "Leydesdorff", "219.747"},
    {1, "N(h)/h", "Glänzel", "131.95"},
    {1, "N(h)/h", "Moed", "129.612"},
    {1, "N(h)/h", "Van Raan", "142.235"},
    {1, "N(h)/h", "Rousseau", "121"},
    {1, "N(h)/h", "Schubert", "151.140"},
    {1, "N(h)/h", "Martin", "185.48"},
    {1, "N(h)/h", "Narin", "179.55"},
    {1, "N(h)/h", "Garfield", "284.03"},
    {1, "N(h)/h", "Braun", "96.378"},
    {1, "N(h)/h", "Small", "219.735"},
    {1, "N(h)/h", "Egghe", "133.167"},
    {1, "N(h)/h", "Ingwersen", "109.333"},
    {1, "N(h)/h", "White", "122.74"},
    {1, "N(g)", "Leydesdorff", "21225"},
    {1, "N(g)", "Glänzel", "9810"},
    {1, "N(g)", "Moed", "7397"},
    {1, "N(g)", "Van Raan", "8042"},
    {1, "N(g)", "Rousseau", "6300"},
    {1, "N(g)", "Schubert", "7348"},
    {1, "N(g)", "Martin", "7597"},
    {1, "N(g)", "Narin", "7209"},
    {1, "N(g)", "Garfield", "11359"},
    {1, "N(g)", "Braun", "4373"},
    {1, "N(g)", "Small", "7690"},
    {1, "N(g)", "Egghe", "4807"},
    {1, "N(g)", "Ingwersen", "3508"},
    {1, "N(g)", "White", "2399"},
    {1, "N(g)/g", "Leydesdorff", "146.379"},
    {1, "N(g)/g", "Glänzel", "99.691"},
    {1, "N(g)/g", "Moed", "86.01"},
    {1, "N(g)/g", "Van Raan", "90.360"},
    {1, "N(g)/g", "Rousseau", "79.747"},
    {1, "N(g)/g", "Schubert", "86.447"},
    {1, "N(g)/g", "Martin", "89.376"},
    {1, "N(g)/g", "Narin", "106.015"},
    {1, "N(g)/g", "Garfield", "107.160"},
    {1, "N(g)/g", "Braun", "66.258"},
    {1, "N(g)/g", "Small", "134.912"},
    {1, "N(g)/g", "Egghe", "69.667"},
    {1, "N(g)/g", "Ingwersen", "59.458"},
    {1, "N(g)/g", "White", "85.68"},
    {1, "g_10", "Narin", "-"},
    {1, "g_10", "Garfield", "45"},
    {1, "g_10", "Braun", "-"},
    {1, "g_10", "Small", "38"},
    {1, "g_10", "Egghe", "-"},
    {1, "g_10", "Ingwersen", "-"},
    {1, "g_10", "White", "21"},
    {1, "g_11", "Narin", "-"},
    {1, "g_11", "Garfield", "43"},
    {1, "g_11", "Braun", "-"},
    {1, "g_11", "Small", "36"},
    {1, "g_11", "Egghe", "-"},
    {1, "g_11", "Ingwersen", "-"},
    {1, "g_11", "White", "20"},
    {1, "g_12", "Narin", "-"},
    {1, "g_12", "Garfield", "41"},
    {1, "g_12", "Braun", "-"},
    {1, "g_12", "Small", "34"},
    {1, "g_12", "Egghe", "-"},
    {1, "g_12", "Ingwersen", "-"},
    {1, "g_12", "White", "-"},
    {1, "g_13", "Narin", "-"},
    {1, "g_13", "Garfield", "39"},
    {1, "g_13", "Braun", "-"},
    {1, "g_13", "Small", "-"},
    {1, "g_13", "Egghe", "-"},
    {1, "g_13", "Ingwersen", "-"},
    {1, "g_13", "White", "-"},
    {1, "g_14", "Narin", "-"},
    {1, "g_14", "Garfield", "38"},
    {1, "g_14", "Braun", "-"},
    {1, "g_14", "Small", "-"},
    {1, "g_14", "Egghe", "-"},
    {1, "g_14", "Ingwersen", "-"},
    {1, "g_14", "White", "-"},
    {1, "H", "Narin", "107.480"},
    {1, "H", "Garfield", "133.405"},
    {1, "H", "Braun", "74"},
    {1, "H", "Small", "112.765"},
    {1, "H", "Egghe", "79.373"},
    {1, "H", "Ingwersen", "66.136"},
    {1, "H", "White", "63.017"},
    {2, "h", "Leydesdorff", "79"},
    {2, "h", "Glänzel", "61"},
    {2, "h", "Moed", "49"},
    {2, "h", "Van Raan", "48"},
    {2, "h", "Rousseau", "43"},
    {2, "h", "Schubert", "42"},
    {2, "h", "Martin", "38"},
    {2, "h", "Narin", "38"},
    {2, "h", "Garfield", "37"},
    {2, "h", "Braun", "37"},
    {2, "h", "Small", "34"},
    {2, "h", "Egghe", "30"},
    {2, "h", "Ingwersen", "27"},
    {2, "h", "White", "19"},
    {2, "g_bar", "Leydesdorff", "88.750"},
    {2, "g_bar", "Glänzel", "79.333"},
    {2, "g_bar", "Moed", "65.250"},
    {2, "g_bar", "Van Raan", "67.500"},
    {2, "g_bar", "Rousseau", "59.500"},
    {2, "g_bar", "Schubert", "58.333"},
    {2, "g_bar", "Martin", "55.250"},
    {2, "g_bar", "Narin", "52.500"},
    {2, "g_bar", "Garfield", "57.769"},
    {2, "g_bar", "Braun", "49"},
    {2, "g_bar", "Small", "46.545"},
    {2, "g_bar", "Egghe", "44.286"},
    {2, "g_bar", "Ingwersen", "39.500"},
    {2, "g_bar", "White", "25.000"},
    {2, "R", "Leydesdorff", "131.757"},
    {2, "R", "Glänzel", "89.716"},
    {2, "R", "Moed", "79.693"},
    {2, "R", "Van Raan", "82.662"},
    {2, "R", "Rousseau", "72.132"},
    {2, "R", "Schubert", "79.743"},
    {2, "R", "Martin", "83.952"},
    {2, "R", "Narin", "82.6015"},
    {2, "R", "Garfield", "102.513"},
    {2, "R", "Braun", "59.716"},
    {2, "R", "Small", "86.435"},
    {2, "R", "Egghe", "63.206"},
    {2, "R", "Ingwersen", "54.332"},
    {2, "R", "White", "48.291"},
    {2, "g", "Leydesdorff", "145"},
    {2, "g", "Glänzel", "99"},
    {2, "g", "Moed", "86"},
    {2, "g", "Van Raan", "89"},
    {2, "g", "Rousseau", "79"},
    {2, "g", "Schubert", "85"},
    {2, "g", "Martin", "85"},
    {2, "g", "Narin", "68"},
    {2, "g", "Garfield", "106"},
    {2, "g", "Braun", "66"},
    {2, "g", "Small", "57"},
    {2, "g", "Egghe", "69"},
    {2, "g", "Ingwersen", "59"},
    {2, "g", "White", "28"},
    {2, "H", "Leydesdorff", "158"},
    {2, "H", "Glänzel", "105.652"},
    {2, "H", "Moed", "98"},
    {2, "H", "Van Raan", "96"},
    {2, "H", "Rousseau", "86"},
    {2, "H", "Schubert", "102.879"},
    {2, "H", "Martin", "107.480"},
    {2, "H", "Narin", "107.480"},
    {2, "H", "Garfield", "133.405"},
    {2, "H", "Braun", "74"},
    {2, "H", "Small", "112.765"},
    {2, "H", "Egghe", "79.373"},
    {2, "H", "Ingwersen", "66.136"},
    {2, "H", "White", "63.017"},
    {2, "D", "Leydesdorff", "168.757"},
    {2, "D", "Glänzel", "111.252"},
    {2, "D", "Moed", "101.494"},
    {2, "D", "Van Raan", "106.593"},
    {2, "D", "Rousseau", "92.504"},
    {2, "D", "Schubert", "104.555"},
    {2, "D", "Martin", "112.481"},
    {2, "D", "Narin", "110.463"},
    {2, "D", "Garfield", "140.175"},
    {2, "D", "Braun", "75.914"},
    {2, "D", "Small", "117.414"},
    {2, "D", "Egghe", "84.202"},
    {2, "D", "Ingwersen", "71.938"},
    {2, "D", "White", "65.597"},
    {2, "A", "Leydesdorff", "219.747"},
    {2, "A", "Glänzel", "131.950"},
    {2, "A", "Moed", "129.612"},
    {2, "A", "Van Raan", "142.235"},
    {2, "A", "Rousseau", "121"},
    {2, "A", "Schubert", "151.140"},
    {2, "A", "Martin", "185.480"},
    {2, "A", "Narin", "179.550"},
    {2, "A", "Garfield", "284.030"},
    {2, "A", "Braun", "96.378"},
    {2, "A", "Small", "219.735"},
    {2, "A", "Egghe", "133.167"},
    {2, "A", "Ingwersen", "109.330"},
    {2, "A", "White", "122.740"},
    {3, "g_bar/h", "Leydesdorff", "1.123"},
    {3, "g_bar/h", "Glänzel", "1.301"},
    {3, "g_bar/h", "Moed", "1.331"},
    {3, "g_bar/h", "Van Raan", "1.406"},
    {3, "g_bar/h", "Rousseau", "1.383"},
    {3, "g_bar/h", "Schubert", "1.389"},
    {3, "g_bar/h", "Martin", "1.454"},
    {3, "g_bar/h", "Narin", "1.382"},
    {3, "g_bar/h", "Garfield", "1.561"},
    {3, "g_bar/h", "Braun", "1.324"},
    {3, "g_bar/h", "Small", "1.552"},
    {3, "g_bar/h", "Egghe", "1.476"},
    {3, "g_bar/h", "Ingwersen", "1.463"},
    {3, "g_bar/h", "White", "1.316"},
    {3, "R/g_bar", "Leydesdorff", "1.485"},
    {3, "R/g_bar", "Glänzel", "1.131"},
    {3, "R/g_bar", "Moed", "1.221"},
    {3, "R/g_bar", "Van Raan", "1.225"},
    {3, "R/g_bar", "Rousseau", "1.212"},
    {3, "R/g_bar", "Schubert", "1.367"},
    {3, "R/g_bar", "Martin", "1.519"},
    {3, "R/g_bar", "Narin", "1.573"},
    {3, "R/g_bar", "Garfield", "1.775"},
    {3, "R/g_bar", "Braun", "1.219"},
    {3, "R/g_bar", "Small", "1.857"},
    {3, "R/g_bar", "Egghe", "1.427"},
    {3, "R/g_bar", "Ingwersen", "1.375"},
    {3, "R/g_bar", "White", "0.580"},
    {3, "g/R", "Leydesdorff", "1.101"},
    {3, "g/R", "Glänzel", "1.103"},
    {3, "g/R", "Moed", "1.079"},
    {3, "g/R", "Van Raan", "1.077"},
    {3, "g/R", "Rousseau", "1.095"},
    {3, "g/R", "Schubert", "1.066"},
    {3, "g/R", "Martin", "1.012"},
    {3, "g/R", "Narin", "0.823"},
    {3, "g/R", "Garfield", "1.034"},
    {3, "g/R", "Braun", "1.105"},
    {3, "g/R", "Small", "0.659"},
    {3, "g/R", "Egghe", "1.092"},
    {3, "g/R", "Ingwersen", "1.086"},
    {3, "g/R", "White", "0.580"},
    {3, "H/g", "Leydesdorff", "1.090"},
    {3, "H/g", "Glänzel", "1.067"},
    {3, "H/g", "Moed", "1.140"},
    {3, "H/g", "Van Raan", "1.079"},
    {3, "H/g", "Rousseau", "1.090"},
    {3, "H/g", "Schubert", "1.210"},
    {3, "H/g", "Martin", "1.264"},
    {3, "H/g", "Narin", "1.581"},
    {3, "H/g", "Garfield", "1.259"},
    {3, "H/g", "Braun", "1.212"},
    {3, "H/g", "Small", "1.978"},
    {3, "H/g", "Egghe", "1.150"},
    {3, "H/g", "Ingwersen", "1.121"},
    {3, "H/g", "White", "2.251"},
    {3, "D/H", "Leydesdorff", "1.068"},
    {3, "D/H", "Glänzel", "1.053"},
    {3, "D/H", "Moed", "1.036"},
    {3, "D/H", "Van Raan", "1.103"},
    {3, "D/H", "Rousseau", "1.076"},
    {3, "D/H", "Schubert", "1.016"},
    {3, "D/H", "Martin", "1.047"},
    {3, "D/H", "Narin", "1.028"},
    {3, "D/H", "Garfield", "1.051"},
    {3, "D/H", "Braun", "1.026"},
    {3, "D/H", "Small", "1.041"},
    {3, "D/H", "Egghe", "1.061"},
    {3, "D/H", "Ingwersen", "1.088"},
    {3, "D/H", "White", "1.041"},
    {3, "A/D", "Leydesdorff", "1.302"},
    {3, "A/D", "Glänzel", "1.186"},
    {3, "A/D", "Moed", "1.271"},
    {3, "A/D", "Van Raan", "1.334"},
    {3, "A/D", "Rousseau", "1.308"},
    {3, "A/D", "Schubert", "1.446"},
    {3, "A/D", "Martin", "1.649"},
    {3, "A/D", "Narin", "1.625"},
    {3, "A/D", "Garfield", "2.026"},
    {3, "A/D", "Braun", "1.267"},
    {3, "A/D", "Small", "1.871"},
    {3, "A/D", "Egghe", "1.582"},
    {3, "A/D", "Ingwersen", "1.520"},
    {3, "A/D", "White", "1.871"},
    {3, "A/h", "Leydesdorff", "2.782"},
    {3, "A/h", "Glänzel", "2.163"},
    {3, "A/h", "Moed", "2.645"},
    {3, "A/h", "Van Raan", "2.963"},
    {3, "A/h", "Rousseau", "2.813"},
    {3, "A/h", "Schubert", "3.599"},
    {3, "A/h", "Martin", "4.881"},
    {3, "A/h", "Narin", "9.450"},
    {3, "A/h", "Garfield", "15.352"},
    {3, "A/h", "Braun", "5.206"},
    {3, "A/h", "Small", "12.926"},
    {3, "A/h", "Egghe", "8.878"},
    {3, "A/h", "Ingwersen", "8.100"},
    {3, "A/h", "White", "12.920"},
    {3, "2A/((r+1)h)", "Leydesdorff", "1.113"},
    {3, "2A/((r+1)h)", "Glänzel", "1.082"},
    {3, "2A/((r+1)h)", "Moed", "1.058"},
    {3, "2A/((r+1)h)", "Van Raan", "1.185"},
    {3, "2A/((r+1)h)", "Rousseau", "1.126"},
    {3, "2A/((r+1)h)", "Schubert", "1.028"},
    {3, "2A/((r+1)h)", "Martin", "1.085"},
    {3, "2A/((r+1)h)", "Narin", "1.050"},
    {3, "2A/((r+1)h)", "Garfield", "1.097"},
    {3, "2A/((r+1)h)", "Braun", "1.042"},
    {3, "2A/((r+1)h)", "Small", "1.077"},
    {3, "2A/((r+1)h)", "Egghe", "1.110"},
    {3, "2A/((r+1)h)", "Ingwersen", "1.157"},
    {3, "2A/((r+1)h)", "White", "1.175"},
    {4, "h", "Leydesdorff", "1"},
    {4, "h", "Glänzel", "2"},
    {4, "h", "Moed", "3"},
    {4, "h", "Van Raan", "4"},
    {4, "h", "Rousseau", "5"},
    {4, "h", "Schubert", "6"},
    {4, "h", "Martin", "7/8"},
    {4, "h", "Narin", "7/8"},
    {4, "h", "Garfield", "9/10"},
    {4, "h", "Braun", "9/10"},
    {4, "h", "Small", "11"},
    {4, "h", "Egghe", "12"},
    {4, "h", "Ingwersen", "13"},
    {4, "h", "White", "14"},
    {4, "g_bar", "Leydesdorff", "1"},
    {4, "g_bar", "Glänzel", "2"},
    {4, "g_bar", "Moed", "4"},
    {4, "g_bar", "Van Raan", "3"},
    {4, "g_bar", "Rousseau", "5"},
    {4, "g_bar", "Schubert", "6"},
    {4, "g_bar", "Martin", "8"},
    {4, "g_bar", "Narin", "9"},
    {4, "g_bar", "Garfield", "7"},
    {4, "g_bar", "Braun", "10"},
    {4, "g_bar", "Small", "11"},
    {4, "g_bar", "Egghe", "12"},
    {4, "g_bar", "Ingwersen", "13"},
    {4, "g_bar", "White", "14"},
    {4, "R", "Leydesdorff", "1"},
    {4, "R", "Glänzel", "3"},
    {4, "R", "Moed", "8"},
    {4, "R", "Van Raan", "6"},
    {4, "R", "Rousseau", "10"},
    {4, "R", "Schubert", "9"},
    {4, "R", "Martin", "5"},
    {4, "R", "Narin", "7"},
    {4, "R", "Garfield", "2"},
    {4, "R", "Braun", "12"},
    {4, "R", "Small", "4"},
    {4, "R", "Egghe", "11"},
    {4, "R", "Ingwersen", "13"},
    {4, "R", "White", "14"},
    {4, "g", "Leydesdorff", "1"},
    {4, "g", "Glänzel", "3"},
    {4, "g", "Moed", "5"},
    {4, "g", "Van Raan", "4"},
    {4, "g", "Rousseau", "8"},
    {4, "g", "Schubert", "6/7"},
    {4, "g", "Martin", "6/7"},
    {4, "g", "Narin", "10"},
    {4, "g", "Garfield", "2"},
    {4, "g", "Braun", "11"},
    {4, "g", "Small", "13"},
    {4, "g", "Egghe", "9"},
    {4, "g", "Ingwersen", "12"},
    {4, "g", "White", "14"},
    {4, "H", "Leydesdorff", "1"},
    {4, "H", "Glänzel", "6"},
    {4, "H", "Moed", "8"},
    {4, "H", "Van Raan", "9"},
    {4, "H", "Rousseau", "10"},
    {4, "H", "Schubert", "7"},
    {4, "H", "Martin", "4/5"},
    {4, "H", "Narin", "4/5"},
    {4, "H", "Garfield", "2"},
    {4, "H", "Braun", "12"},
    {4, "H", "Small", "3"},
    {4, "H", "Egghe", "11"},
    {4, "H", "Ingwersen", "13"},
    {4, "H", "White", "14"},
    {4, "D", "Leydesdorff", "1"},
    {4, "D", "Glänzel", "5"},
    {4, "D", "Moed", "9"},
    {4, "D", "Van Raan", "7"},
    {4, "D", "Rousseau", "10"},
    {4, "D", "Schubert", "8"},
    {4, "D", "Martin", "4"},
    {4, "D", "Narin", "6"},
    {4, "D", "Garfield", "2"},
    {4, "D", "Braun", "12"},
    {4, "D", "Small", "3"},
    {4, "D", "Egghe", "11"},
    {4, "D", "Ingwersen", "13"},
    {4, "D", "White", "14"},
    {4, "A", "Leydesdorff", "2"},
    {4, "A", "Glänzel", "9"},
    {4, "A", "Moed", "10"},
    {4, "A", "Van Raan", "7"},
    {4, "A", "Rousseau", "13"},
    {4, "A", "Schubert", "6"},
    {4, "A", "Martin", "4"},
    {4, "A", "Narin", "5"},
    {4, "A", "Garfield", "1"},
    {4, "A", "Braun", "14"},
    {4, "A", "Small", "3"},
    {4, "A", "Egghe", "8"},
    {4, "A", "Ingwersen", "11"},
    {4, "A", "White", "12"},
    {5, "beta", "Leydesdorff", "1.164"},
    {5, "beta", "Glänzel", "1.124"},
    {5, "beta", "Moed", "1.180"},
    {5, "beta", "Van Raan", "1.198"},
    {5, "beta", "Rousseau", "1.171"},
    {5, "beta", "Schubert", "1.230"},
    {5, "beta", "Martin", "1.323"},
    {5, "beta", "Narin", "1.624"},
    {5, "beta", "Garfield", "1.322"},
    {5, "beta", "Braun", "1.163"},
    {5, "beta", "Small", "2.060"},
    {5, "beta", "Egghe", "1.222"},
    {5, "beta", "Ingwersen", "1.219"},
    {5, "beta", "White", "2.339"},
    {5, "r+1", "Leydesdorff", "5"},
    {5, "r+1", "Glänzel", "4"},
    {5, "r+1", "Moed", "5"},
    {5, "r+1", "Van Raan", "5"},
    {5, "r+1", "Rousseau", "5"},
    {5, "r+1", "Schubert", "7"},
    {5, "r+1", "Martin", "9"},
    {5, "r+1", "Narin", "9"},
    {5, "r+1", "Garfield", "14"},
    {5, "r+1", "Braun", "5"},
    {5, "r+1", "Small", "12"},
    {5, "r+1", "Egghe", "8"},
    {5, "r+1", "Ingwersen", "7"},
    {5, "r+1", "White", "11"},
    {5, "delta", "Leydesdorff", "0"},
    {5, "delta", "Glänzel", "0"},
    {5, "delta", "Moed", "0"},
    {5, "delta", "Van Raan", "0"},
    {5, "delta", "Rousseau", "0"},
    {5, "delta", "Schubert", "0"},
    {5, "delta", "Martin", "0"},
    {5, "delta", "Narin", "0"},
    {5, "delta", "Garfield", "1"},
    {5, "delta", "Braun", "0"},
    {5, "delta", "Small", "0"},
    {5, "delta", "Egghe", "0"},
    {5, "delta", "Ingwersen", "0"},
    {5, "delta", "White", "1"},
    {5, "l", "Leydesdorff", "4"},
    {5, "l", "Glänzel", "2"},
    {5, "l", "Moed", "1"},
    {5, "l", "Van Raan", "4"},
    {5, "l", "Rousseau", "2"},
    {5, "l", "Schubert", "1"},
    {5, "l", "Martin", "1"},
    {5, "l", "Narin", "0"},
    {5, "l", "Garfield", "1"},
    {5, "l", "Braun", "0"},
    {5, "l", "Small", "0"},
    {5, "l", "Egghe", "1"},
    {5, "l", "Ingwersen", "1"},
    {5, "l", "White", "1"},
    {6, "h", "Leydesdorff", "79"},
    {6, "h", "Glänzel", "61"},
    {6, "h", "Moed", "49"},
    {6, "h", "Van Raan", "48"},
    {6, "h", "Rousseau", "43"},
    {6, "h", "Schubert", "42"},
    {6, "h", "Martin", "38"},
    {6, "h", "Narin", "38"},
    {6, "h", "Garfield", "37"},
    {6, "h", "Braun", "37"},
    {6, "h", "Small", "34"},
    {6, "h", "Egghe", "30"},
    {6, "h", "Ingwersen", "27"},
    {6, "h", "White", "19"},
    {6, "B", "Leydesdorff", "83.734"},
    {6, "B", "Glänzel", "69.565"},
    {6, "B", "Moed", "56.544"},
    {6, "B", "Van Raan", "56.921"},
    {6, "B", "Rousseau", "50.582"},
    {6, "B", "Schubert", "49.497"},
    {6, "B", "Martin", "45.820"},
    {6, "B", "Narin", "44.665"},
    {6, "B", "Garfield", "46.233"},
    {6, "B", "Braun", "42.579"},
    {6, "B", "Small", "39.781"},
    {6, "B", "Egghe", "36.450"},
    {6, "B", "Ingwersen", "32.657"},
    {6, "B", "White", "21.795"},
    {6, "C", "Leydesdorff", "102.024"},
    {6, "C", "Glänzel", "73.979"},
    {6, "C", "Moed", "62.490"},
    {6, "C", "Van Raan", "62.990"},
    {6, "C", "Rousseau", "55.693"},
    {6, "C", "Schubert", "57.872"},
    {6, "C", "Martin", "56.482"},
    {6, "C", "Narin", "56.026"},
    {6, "C", "Garfield", "61.587"},
    {6, "C", "Braun", "47.005"},
    {6, "C", "Small", "54.211"},
    {6, "C", "Egghe", "43.545"},
    {6, "C", "Ingwersen", "38.301"},
    {6, "C", "White", "30.291"},
    {6, "E", "Leydesdorff", "107.028"},
    {6, "E", "Glänzel", "77.711"},
    {6, "E", "Moed", "64.915"},
    {6, "E", "Van Raan", "65.361"},
    {6, "E", "Rousseau", "58.284"},
    {6, "E", "Schubert", "59.750"},
    {6, "E", "Martin", "56.833"},
    {6, "E", "Narin", "50.833"},
    {6, "E", "Garfield", "62.626"},
    {6, "E", "Braun", "49.417"},
    {6, "E", "Small", "44.023"},
    {6, "E", "Egghe", "45.497"},
    {6, "E", "Ingwersen", "39.912"},
    {6, "E", "White", "23.065"},
    {6, "F", "Leydesdorff", "111.723"},
    {6, "F", "Glänzel", "80.279"},
    {6, "F", "Moed", "69.297"},
    {6, "F", "Van Raan", "67.882"},
    {6, "F", "Rousseau", "60.811"},
    {6, "F", "Schubert", "65.734"},
    {6, "F", "Martin", "63.908"},
    {6, "F", "Narin", "63.908"},
    {6, "F", "Garfield", "70.257"},
    {6, "F", "Braun", "52.326"},
    {6, "F", "Small", "61.919"},
    {6, "F", "Egghe", "48.797"},
    {6, "F", "Ingwersen", "42.257"},
    {6, "F", "White", "34.602"},
    {6, "K", "Leydesdorff", "115.463"},
    {6, "K", "Glänzel", "82.379"},
    {6, "K", "Moed", "70.521"},
    {6, "K", "Van Raan", "71.530"},
    {6, "K", "Rousseau", "63.069"},
    {6, "K", "Schubert", "66.267"},
    {6, "K", "Martin", "65.378"},
    {6, "K", "Narin", "64.789"},
    {6, "K", "Garfield", "72.017"},
    {6, "K", "Braun", "52.998"},
    {6, "K", "Small", "63.183"},
    {6, "K", "Egghe", "50.260"},
    {6, "K", "Ingwersen", "44.072"},
    {6, "K", "White", "35.304"},
    {7, "B/h", "Leydesdorff", "1.060"},
    {7, "B/h", "Glänzel", "1.140"},
    {7, "B/h", "Moed", "1.110"},
    {7, "B/h", "Van Raan", "1.186"},
    {7, "B/h", "Rousseau", "1.176"},
    {7, "B/h", "Schubert", "1.179"},
    {7, "B/h", "Martin", "1.206"},
    {7, "B/h", "Narin", "1.223"},
    {7, "B/h", "Garfield", "1.250"},
    {7, "B/h", "Braun", "1.151"},
    {7, "B/h", "Small", "1.170"},
    {7, "B/h", "Egghe", "1.215"},
    {7, "B/h", "Ingwersen", "1.210"},
    {7, "B/h", "White", "1.147"},
    {7, "C/B", "Leydesdorff", "1.218"},
    {7, "C/B", "Glänzel", "1.063"},
    {7, "C/B", "Moed", "1.106"},
    {7, "C/B", "Van Raan", "1.107"},
    {7, "C/B", "Rousseau", "1.101"},
    {7, "C/B", "Schubert", "1.169"},
    {7, "C/B", "Martin", "1.233"},
    {7, "C/B", "Narin", "1.254"},
    {7, "C/B", "Garfield", "1.332"},
    {7, "C/B", "Braun", "1.104"},
    {7, "C/B", "Small", "1.363"},
    {7, "C/B", "Egghe", "1.195"},
    {7, "C/B", "Ingwersen", "1.173"},
    {7, "C/B", "White", "1.3401."},
    {7, "E/C", "Leydesdorff", "1.049"},
    {7, "E/C", "Glänzel", "1.050"},
    {7, "E/C", "Moed", "1.039"},
    {7, "E/C", "Van Raan", "1.038"},
    {7, "E/C", "Rousseau", "1.047"},
    {7, "E/C", "Schubert", "1.032"},
    {7, "E/C", "Martin", "1.007"},
    {7, "E/C", "Narin", "0.907"},
    {7, "E/C", "Garfield", "1.017"},
    {7, "E/C", "Braun", "1.051"},
    {7, "E/C", "Small", "0.812"},
    {7, "E/C", "Egghe", "1.045"},
    {7, "E/C", "Ingwersen", "1.042"},
    {7, "E/C", "White", "0.761"},
    {7, "F/E", "Leydesdorff", "1.044"},
    {7, "F/E", "Glänzel", "1.033"},
    {7, "F/E", "Moed", "1.068"},
    {7, "F/E", "Van Raan", "1.040"},
    {7, "F/E", "Rousseau", "1.043"},
    {7, "F/E", "Schubert", "1.100"},
    {7, "F/E", "Martin", "1.124"},
    {7, "F/E", "Narin", "1.257"},
    {7, "F/E", "Garfield", "1.122"},
    {7, "F/E", "Braun", "1.059"},
    {7, "F/E", "Small", "1.407"},
    {7, "F/E", "Egghe", "1.073"},
    {7, "F/E", "Ingwersen", "1.059"},
    {7, "F/E", "White", "1.500"},
    {7, "K/F", "Leydesdorff", "1.033"},
    {7, "K/F", "Glänzel", "1.026"},
    {7, "K/F", "Moed", "1.018"},
    {7, "K/F", "Van Raan", "1.0537"},
    {7, "K/F", "Rousseau", "1.037"},
    {7, "K/F", "Schubert", "1.008"},
    {7, "K/F", "Martin", "1.023"},
    {7, "K/F", "Narin", "1.014"},
    {7, "K/F", "Garfield", "1.025"},
    {7, "K/F", "Braun", "1.013"},
    {7, "K/F", "Small", "1.020"},
    {7, "K/F", "Egghe", "1.030"},
    {7, "K/F", "Ingwersen", "1.043"},
    {7, "K/F", "White", "1.020"},
    {8, "h", "Leydesdorff", "1"},
    {8, "h", "Glänzel", "2"},
    {8, "h", "Moed", "3"},
    {8, "h", "Van Raan", "4"},
    {8, "h", "Rousseau", "5"},
    {8, "h", "Schubert", "6"},
    {8, "h", "Martin", "7"},
    {8, "h", "Narin", "8"},
    {8, "h", "Garfield", "9"},
    {8, "h", "Braun", "10"},
    {8, "h", "Small", "11"},
    {8, "h", "Egghe", "12"},
    {8, "h", "Ingwersen", "13"},
    {8, "h", "White", "14"},
    {8, "B", "Leydesdorff", "1"},
    {8, "B", "Glänzel", "2"},
    {8, "B", "Moed", "4"},
    {8, "B", "Van Raan", "3"},
    {8, "B", "Rousseau", "5"},
    {8, "B", "Schubert", "6"},
    {8, "B", "Martin", "8"},
    {8, "B", "Narin", "9"},
    {8, "B", "Garfield", "7"},
    {8, "B", "Braun", "10"},
    {8, "B", "Small", "11"},
    {8, "B", "Egghe", "12"},
    {8, "B", "Ingwersen", "13"},
    {8, "B", "White", "14"},
    {8, "C", "Leydesdorff", "1"},
    {8, "C", "Glänzel", "2"},
    {8, "C", "Moed", "4"},
    {8, "C", "Van Raan", "3"},
    {8, "C", "Rousseau", "9"},
    {8, "C", "Schubert", "6"},
    {8, "C", "Martin", "7"},
    {8, "C", "Narin", "8"},
    {8, "C", "Garfield", "5"},
    {8, "C", "Braun", "11"},
    {8, "C", "Small", "10"},
    {8, "C", "Egghe", "12"},
    {8, "C", "Ingwersen", "13"},
    {8, "C", "White", "14"},
    {8, "E", "Leydesdorff", "1"},
    {8, "E", "Glänzel", "2"},
    {8, "E", "Moed", "4"},
    {8, "E", "Van Raan", "3"},
    {8, "E", "Rousseau", "7"},
    {8, "E", "Schubert", "6"},
    {8, "E", "Martin", "8"},
    {8, "E", "Narin", "9"},
    {8, "E", "Garfield", "5"},
    {8, "E", "Braun", "10"},
    {8, "E", "Small", "12"},
    {8, "E", "Egghe", "11"},
    {8, "E", "Ingwersen", "13"},
    {8, "E", "White", "14"},
    {8, "F", "Leydesdorff", "1"},
    {8, "F", "Glänzel", "2"},
    {8, "F", "Moed", "4"},
    {8, "F", "Van Raan", "5"},
    {8, "F", "Rousseau", "10"},
    {8, "F", "Schubert", "6"},
    {8, "F", "Martin", "7/8"},
    {8, "F", "Narin", "7/8"},
    {8, "F", "Garfield", "3"},
    {8, "F", "Braun", "11"},
    {8, "F", "Small", "9"},
    {8, "F", "Egghe", "12"},
    {8, "F", "Ingwersen", "13"},
    {8, "F", "White", "14"},
    {8, "K", "Leydesdorff", "1"},
    {8, "K", "Glänzel", "2"},
    {8, "K", "Moed", "5"},
    {8, "K", "Van Raan", "4"},
    {8, "K", "Rousseau", "10"},
    {8, "K", "Schubert", "6"},
    {8, "K", "Martin", "7"},
    {8, "K", "Narin", "8"},
    {8, "K", "Garfield", "3"},
    {8, "K", "Braun", "11"},
    {8, "K", "Small", "9"},
    {8, "K", "Egghe", "12"},
    {8, "K", "Ingwersen", "13"},
    {8, "K", "White", "14"},
    {9, "h", "Leydesdorff", "13"},
    {9, "h", "Glänzel", "18"},
    {9, "h", "Moed", "18"},
    {9, "h", "Van Raan", "19"},
    {9, "h", "Rousseau", "13"},
    {9, "h", "Schubert", "18"},
    {9, "h", "Martin", "16"},
    {9, "h", "Narin", "27"},
    {9, "h", "Garfield", "27"},
    {9, "h", "Braun", "25"},
    {9, "h", "Small", "18"},
    {9, "h", "Egghe", "13"},
    {9, "h", "Ingwersen", "13"},
    {9, "h", "White", "12"},
    {9, "g", "Leydesdorff", "19"},
    {9, "g", "Glänzel", "27"},
    {9, "g", "Moed", "27"},
    {9, "g", "Van Raan", "27"},
    {9, "g", "Rousseau", "15"},
    {9, "g", "Schubert", "30"},
    {9, "g", "Martin", "27"},
    {9, "g", "Narin", "40"},
    {9, "g", "Garfield", "59"},
    {9, "g", "Braun", "38"},
    {9, "g", "Small", "39"},
    {9, "g", "Egghe", "19"},
    {9, "g", "Ingwersen", "26"},
    {9, "g", "White", "25"},
    {9, "h/g", "Leydesdorff", "0.684"},
    {9, "h/g", "Glänzel", "0.667"},
    {9, "h/g", "Moed", "0.667"},
    {9, "h/g", "Van Raan", "0.704"},
    {9, "h/g", "Rousseau", "0.867"},
    {9, "h/g", "Schubert", "0.600"},
    {9, "h/g", "Martin", "0.593"},
    {9, "h/g", "Narin", "0.675"},
    {9, "h/g", "Garfield", "0.458"},
    {9, "h/g", "Braun", "0.658"},
    {9, "h/g", "Small", "0.462"},
    {9, "h/g", "Egghe", "0.684"},
    {9, "h/g", "Ingwersen", "0.500"},
    {9, "h/g", "White", "0.480"},
    {9, "R", "Leydesdorff", "17.52"},
    {9, "R", "Glänzel", "37.85"},
    {9, "R", "Moed", "27.40"},
    {9, "R", "Van Raan", "24.73"},
    {9, "R", "Rousseau", "14.20"},
    {9, "R", "Schubert", "25.53"},
    {9, "R", "Martin", "25.17"},
    {9, "R", "Narin", "37.51"},
    {9, "R", "Garfield", "55.21"},
    {9, "R", "Braun", "34.17"},
    {9, "R", "Small", "24.37"},
    {9, "R", "Egghe", "24.85"},
    {9, "R", "Ingwersen", "17.77"},
    {9, "R", "White", "23.52"},
    {9, "r", "Leydesdorff", "2"},
    {9, "r", "Glänzel", "2"},
    {9, "r", "Moed", "3"},
    {9, "r", "Van Raan", "2"},
    {9, "r", "Rousseau", "1"},
    {9, "r", "Schubert", "2"},
    {9, "r", "Martin", "3"},
    {9, "r", "Narin", "2"},
    {9, "r", "Garfield", "7"},
    {9, "r", "Braun", "2"},
    {9, "r", "Small", "2"},
    {9, "r", "Egghe", "5"},
    {9, "r", "Ingwersen", "2"},
    {9, "r", "White", "6"},
    {9, "H", "Leydesdorff", "18.384"},
    {9, "H", "Glänzel", "47.624"},
    {9, "H", "Moed", "31.177"},
    {9, "H", "Van Raan", "26.870"},
    {9, "H", "Rousseau", "13"},
    {9, "H", "Schubert", "25.456"},
    {9, "H", "Martin", "27.713"},
    {9, "H", "Narin", "38.184"},
    {9, "H", "Garfield", "71.435"},
    {9, "H", "Braun", "35.355"},
    {9, "H", "Small", "24.456"},
    {9, "H", "Egghe", "29.069"},
    {9, "H", "Ingwersen", "18.385"},
    {9, "H", "White", "29.394"},
    {9, "H/g", "Leydesdorff", "0.968"},
    {9, "H/g", "Glänzel", "1.764"},
    {9, "H/g", "Moed", "1.155"},
    {9, "H/g", "Van Raan", "0.995"},
    {9, "H/g", "Rousseau", "0.867"},
    {9, "H/g", "Schubert", "0.849"},
    {9, "H/g", "Martin", "1.026"},
    {9, "H/g", "Narin", "0.955"},
    {9, "H/g", "Garfield", "1.211"},
    {9, "H/g", "Braun", "0.930"},
    {9, "H/g", "Small", "0.653"},
    {9, "H/g", "Egghe", "1.530"},
    {9, "H/g", "Ingwersen", "0.707"},
    {9, "H/g", "White", "1.176"},
    {9, "H/R", "Leydesdorff", "1.049"},
    {9, "H/R", "Glänzel", "1.258"},
    {9, "H/R", "Moed", "1.138"},
    {9, "H/R", "Van Raan", "1.087"},
    {9, "H/R", "Rousseau", "0.915"},
    {9, "H/R", "Schubert", "0.997"},
    {9, "H/R", "Martin", "1.101"},
    {9, "H/R", "Narin", "1.018"},
    {9, "H/R", "Garfield", "1.294"},
    {9, "H/R", "Braun", "1.035"},
    {9, "H/R", "Small", "1.0035"},
    {9, "H/R", "Egghe", "1.170"},
    {9, "H/R", "Ingwersen", "1.035"},
    {9, "H/R", "White", "1.250"}
};

}  // namespace citeidx::fixtures
