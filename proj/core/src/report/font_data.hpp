#pragma once

// Generated by tools/gen_font.py from DejaVu Sans Mono; do not edit.

#include <cstdint>

namespace nmeasure::detail {

inline constexpr int kGlyphWidth = 7;
inline constexpr int kGlyphHeight = 15;
inline constexpr int kGlyphAscent = 12;
inline constexpr char kGlyphFirst = ' ';
inline constexpr char kGlyphLast = '~';

// Row-major 8-bit coverage, one block per glyph.
inline constexpr std::uint8_t kGlyphs[95][105] = {
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,248,56,0,0,0,0,0,248,56,0,0,0,0,0,248,56,0,0,0,0,0,247,55,0,0,0,0,0,240,46,0,0,0,0,0,227,31,0,0,0,0,0,0,0,0,0,0,0,0,248,56,0,0,0,0,0,248,56,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,4,255,0,200,64,0,0,4,255,0,200,64,0,0,4,255,0,200,64,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,21,218,0,181,59,0,0,97,142,12,225,2,80,255,255,255,255,255,255,0,0,222,17,129,111,0,0,31,207,0,192,47,0,252,255,255,255,255,255,136,0,160,79,65,172,0,0,2,224,9,144,94,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,136,16,0,0,0,41,194,250,215,83,0,0,190,130,141,52,160,0,0,212,58,136,16,0,0,0,94,207,196,69,3,0,0,0,29,175,165,206,20,0,0,0,136,16,165,117,0,164,60,142,41,212,92,0,62,191,249,231,137,1,0,0,0,136,16,0,0,0,0,0,136,16,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,51,220,228,69,0,0,0,183,60,38,202,0,0,0,183,56,37,203,0,0,25,51,220,230,71,75,173,108,0,4,91,180,111,10,0,61,181,96,42,211,233,81,13,1,0,159,81,29,210,0,0,0,160,79,26,213,0,0,0,39,213,235,88,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,21,189,249,255,32,0,0,129,169,8,0,0,0,0,137,132,0,0,0,0,0,58,229,15,0,0,0,9,196,226,174,1,0,0,120,162,11,202,123,0,228,160,107,0,22,219,105,193,93,220,53,7,100,255,82,0,117,225,241,177,120,204,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,232,28,0,0,0,0,0,232,28,0,0,0,0,0,232,28,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,21,216,8,0,0,0,0,141,120,0,0,0,0,7,236,28,0,0,0,0,62,220,0,0,0,0,0,107,181,0,0,0,0,0,123,168,0,0,0,0,0,107,181,0,0,0,0,0,62,220,0,0,0,0,0,7,236,28,0,0,0,0,0,140,120,0,0,0,0,0,21,216,9,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,181,65,0,0,0,0,0,61,199,0,0,0,0,0,1,226,45,0,0,0,0,0,163,119,0,0,0,0,0,122,166,0,0,0,0,0,109,182,0,0,0,0,0,123,166,0,0,0,0,0,164,119,0,0,0,0,1,227,46,0,0,0,0,63,199,0,0,0,0,0,181,66,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,172,0,0,0,0,169,47,172,22,171,21,0,21,156,229,175,43,0,0,20,155,230,174,43,0,0,169,47,172,22,171,21,0,0,0,172,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,224,28,0,0,0,0,0,224,28,0,0,0,0,0,224,28,0,0,124,255,255,255,255,255,180,0,0,0,224,28,0,0,0,0,0,224,28,0,0,0,0,0,224,28,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,16,255,108,0,0,0,0,50,251,43,0,0,0,0,126,143,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,232,255,255,36,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,36,255,88,0,0,0,0,36,255,88,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,18,239,29,0,0,0,0,126,162,0,0,0,0,9,233,45,0,0,0,0,106,182,0,0,0,0,2,220,64,0,0,0,0,86,202,0,0,0,0,0,203,84,0,0,0,0,66,219,2,0,0,0,0,184,104,0,0,0,0,45,233,8,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,23,186,248,211,53,0,0,171,172,20,125,225,4,9,249,51,0,6,244,62,42,255,8,0,0,209,101,53,252,12,219,50,196,113,42,255,8,0,0,209,101,9,249,50,0,6,244,62,0,171,171,19,123,226,5,0,23,187,249,212,54,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,144,255,255,152,0,0,0,0,0,148,152,0,0,0,0,0,148,152,0,0,0,0,0,148,152,0,0,0,0,0,148,152,0,0,0,0,0,148,152,0,0,0,0,0,148,152,0,0,0,0,0,148,152,0,0,0,108,255,255,255,255,104,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,85,209,243,193,47,0,7,174,49,12,134,224,1,0,0,0,0,28,255,25,0,0,0,0,79,229,3,0,0,0,18,221,84,0,0,0,9,195,127,0,0,0,4,179,150,0,0,0,1,163,166,2,0,0,0,28,255,255,255,255,255,52,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,66,198,243,194,47,0,0,168,51,11,124,223,0,0,0,0,0,23,255,21,0,0,0,10,130,214,2,0,0,176,255,234,47,0,0,0,0,10,100,229,17,0,0,0,0,0,229,72,48,140,34,11,97,248,31,3,110,216,245,207,77,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,51,253,124,0,0,0,2,194,209,124,0,0,0,102,137,176,124,0,0,19,214,14,176,124,0,0,155,102,0,176,124,0,52,208,3,0,176,124,0,104,255,255,255,255,255,168,0,0,0,0,176,124,0,0,0,0,0,176,124,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,200,255,255,255,164,0,0,200,76,0,0,0,0,0,200,76,0,0,0,0,0,200,238,244,191,43,0,0,0,0,20,152,221,5,0,0,0,0,7,251,47,0,0,0,0,6,251,45,37,139,30,17,146,217,5,2,121,224,241,184,39,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,7,148,237,231,73,0,0,144,197,37,21,130,0,5,243,44,0,0,0,0,39,244,125,242,223,96,0,53,251,156,14,68,248,38,43,255,37,0,0,199,98,11,252,36,0,0,200,97,0,182,156,14,67,247,36,0,29,189,248,221,91,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,48,255,255,255,255,255,72,0,0,0,0,48,238,7,0,0,0,0,147,151,0,0,0,0,6,237,56,0,0,0,0,86,217,0,0,0,0,0,183,123,0,0,0,0,27,251,30,0,0,0,0,122,189,0,0,0,0,0,218,95,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,49,199,246,217,81,0,0,213,137,10,82,247,20,1,252,49,0,0,245,52,0,178,135,9,79,222,8,0,33,222,255,243,69,0,8,222,100,9,61,238,40,49,252,2,0,0,199,104,17,246,103,8,60,245,62,0,75,210,247,223,111,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,60,207,247,206,50,0,7,231,108,12,117,222,3,46,246,1,0,1,244,53,47,245,1,0,1,244,90,8,232,106,11,117,250,100,0,63,210,246,163,201,86,0,0,0,0,11,240,38,0,110,41,24,162,189,0,0,43,209,245,173,21,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,36,255,88,0,0,0,0,36,255,88,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,36,255,88,0,0,0,0,36,255,88,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,36,255,88,0,0,0,0,36,255,88,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,16,255,108,0,0,0,0,50,251,43,0,0,0,0,126,143,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,30,131,154,0,3,76,180,232,143,41,74,223,181,83,5,0,0,74,223,180,82,5,0,0,0,3,77,181,231,142,41,0,0,0,0,30,132,154,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,124,255,255,255,255,255,180,0,0,0,0,0,0,0,124,255,255,255,255,255,180,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,111,153,50,0,0,0,0,23,121,218,203,99,11,0,0,0,0,61,159,229,115,0,0,0,60,158,229,115,23,120,217,204,100,11,0,111,154,50,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,27,171,240,222,84,0,0,116,81,12,106,245,5,0,0,0,0,57,242,4,0,0,0,38,218,91,0,0,0,1,227,82,0,0,0,0,26,255,4,0,0,0,0,0,0,0,0,0,0,0,36,255,12,0,0,0,0,36,255,12,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,17,153,234,238,147,5,5,203,136,25,19,173,113,100,169,0,0,0,26,199,177,61,14,179,242,161,218,208,23,120,150,10,57,228,207,27,121,148,9,55,228,170,72,14,180,243,162,218,86,195,1,0,0,0,0,1,178,171,42,3,0,0,0,5,123,217,249,216,6,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,67,255,121,0,0,0,0,143,207,198,0,0,0,0,218,80,249,21,0,0,38,247,8,201,95,0,0,115,190,0,135,171,0,0,191,124,0,69,242,5,15,250,255,255,255,255,68,87,232,2,0,0,180,145,162,152,0,0,0,97,221,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,8,255,255,252,219,96,0,8,255,40,3,61,248,39,8,255,40,0,0,225,82,8,255,40,3,68,247,34,8,255,255,255,253,122,0,8,255,40,2,43,220,84,8,255,40,0,0,146,156,8,255,40,2,34,212,119,8,255,255,253,229,149,7,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,118,226,240,151,8,0,101,225,56,11,105,64,0,222,94,0,0,0,0,17,255,35,0,0,0,0,40,255,17,0,0,0,0,17,255,35,0,0,0,0,0,225,94,0,0,0,0,0,106,224,56,16,102,63,0,1,122,228,241,151,8,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,52,255,254,232,158,20,0,52,255,3,38,176,200,0,52,255,0,0,13,248,56,52,255,0,0,0,211,105,52,255,0,0,0,199,120,52,255,0,0,0,211,106,52,255,0,0,12,248,57,52,255,3,37,174,200,1,52,255,254,233,159,20,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,216,255,255,255,255,88,0,216,88,0,0,0,0,0,216,88,0,0,0,0,0,216,88,0,0,0,0,0,216,255,255,255,255,44,0,216,88,0,0,0,0,0,216,88,0,0,0,0,0,216,88,0,0,0,0,0,216,255,255,255,255,116,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,164,255,255,255,255,132,0,164,144,0,0,0,0,0,164,144,0,0,0,0,0,164,144,0,0,0,0,0,164,255,255,255,255,36,0,164,144,0,0,0,0,0,164,144,0,0,0,0,0,164,144,0,0,0,0,0,164,144,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,10,151,236,232,128,2,0,157,195,37,22,116,40,27,251,41,0,0,0,0,73,236,0,0,0,0,0,96,217,0,0,240,255,120,73,234,0,0,0,168,120,28,251,37,0,0,168,120,0,162,189,33,15,194,120,0,12,155,239,237,169,27,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,52,255,0,0,0,196,108,52,255,0,0,0,196,108,52,255,0,0,0,196,108,52,255,0,0,0,196,108,52,255,255,255,255,255,108,52,255,0,0,0,196,108,52,255,0,0,0,196,108,52,255,0,0,0,196,108,52,255,0,0,0,196,108,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,212,255,255,255,255,8,0,0,0,252,52,0,0,0,0,0,252,52,0,0,0,0,0,252,52,0,0,0,0,0,252,52,0,0,0,0,0,252,52,0,0,0,0,0,252,52,0,0,0,0,0,252,52,0,0,0,212,255,255,255,255,8,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,208,255,255,156,0,0,0,0,0,148,156,0,0,0,0,0,148,156,0,0,0,0,0,148,156,0,0,0,0,0,148,156,0,0,0,0,0,148,155,0,0,0,0,0,161,138,0,80,109,22,32,226,90,0,12,150,233,235,153,4,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,52,255,0,0,7,190,156,52,255,0,3,174,172,3,52,255,0,157,187,6,0,52,255,138,222,12,0,0,52,255,213,244,57,0,0,52,255,25,120,215,7,0,52,255,0,4,209,135,0,52,255,0,0,54,249,51,52,255,0,0,0,145,209,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,188,116,0,0,0,0,0,188,116,0,0,0,0,0,188,116,0,0,0,0,0,188,116,0,0,0,0,0,188,116,0,0,0,0,0,188,116,0,0,0,0,0,188,116,0,0,0,0,0,188,116,0,0,0,0,0,188,255,255,255,255,172,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,128,255,63,0,15,249,180,128,222,144,0,92,222,180,128,157,209,0,175,142,180,128,152,164,61,207,100,180,128,152,83,210,136,100,180,128,152,10,246,56,100,180,128,152,0,0,0,100,180,128,152,0,0,0,100,180,128,152,0,0,0,100,180,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,48,255,130,0,0,188,104,48,251,224,3,0,188,104,48,244,176,79,0,188,104,48,244,74,181,0,188,104,48,244,2,222,29,188,104,48,244,0,126,129,188,104,48,244,0,27,224,191,104,48,244,0,0,178,247,104,48,244,0,0,75,255,104,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,34,195,248,216,66,0,0,198,154,18,108,239,14,28,255,26,0,0,228,86,67,246,0,0,0,191,125,77,237,0,0,0,182,137,67,246,0,0,0,191,125,29,255,25,0,0,227,86,0,200,152,17,106,240,15,0,36,197,249,217,68,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,216,255,254,230,146,5,0,216,88,1,43,224,117,0,216,88,0,0,152,164,0,216,88,1,43,224,118,0,216,255,254,231,149,6,0,216,88,0,0,0,0,0,216,88,0,0,0,0,0,216,88,0,0,0,0,0,216,88,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,34,195,248,216,66,0,0,198,154,18,108,239,14,28,255,26,0,0,228,86,67,246,0,0,0,191,125,77,237,0,0,0,182,136,67,246,0,0,0,191,122,28,255,25,0,0,227,84,0,199,152,17,106,237,15,0,36,196,251,254,67,0,0,0,0,4,204,142,0,0,0,0,0,43,172,2,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,40,255,255,247,206,71,0,40,255,8,9,114,244,16,40,255,8,0,10,255,53,40,255,8,7,105,237,14,40,255,255,255,221,39,0,40,255,8,18,189,138,0,40,255,8,0,41,246,25,40,255,8,0,0,181,135,40,255,8,0,0,68,239,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,51,195,243,205,71,0,4,230,115,11,44,162,0,36,252,2,0,0,0,0,9,235,130,24,0,0,0,0,45,174,243,211,89,0,0,0,0,3,74,243,51,0,0,0,0,0,191,101,19,157,45,9,68,243,54,0,89,207,246,218,103,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,184,255,255,255,255,255,244,0,0,0,248,56,0,0,0,0,0,248,56,0,0,0,0,0,248,56,0,0,0,0,0,248,56,0,0,0,0,0,248,56,0,0,0,0,0,248,56,0,0,0,0,0,248,56,0,0,0,0,0,248,56,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,36,255,12,0,0,212,92,36,255,12,0,0,212,92,36,255,12,0,0,212,92,36,255,12,0,0,212,92,36,255,12,0,0,212,92,34,255,12,0,0,212,90,23,255,15,0,0,217,78,0,217,119,13,74,248,30,0,48,198,245,217,84,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,136,176,0,0,0,118,191,63,239,2,0,0,184,118,4,241,52,0,5,244,45,0,173,118,0,60,228,0,0,100,183,0,127,155,0,0,28,243,5,193,82,0,0,0,210,68,244,14,0,0,0,137,194,192,0,0,0,0,64,255,120,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,237,54,0,0,0,1,249,200,85,0,0,0,25,251,163,115,29,255,80,55,219,126,145,77,227,130,85,182,88,175,126,126,180,115,145,51,205,174,38,211,145,108,14,234,206,1,185,199,71,0,231,186,0,132,254,34,0,195,134,0,79,250,3,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,54,242,27,0,0,162,156,0,154,161,0,54,234,19,0,19,236,53,199,97,0,0,0,104,233,194,1,0,0,0,42,255,128,0,0,0,0,190,151,235,26,0,0,92,218,7,138,164,0,16,232,73,0,15,235,58,150,176,0,0,0,111,205,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,128,191,0,0,0,137,187,10,229,73,0,27,243,45,0,96,208,1,155,153,0,0,2,206,131,238,22,0,0,0,64,255,119,0,0,0,0,0,252,52,0,0,0,0,0,252,52,0,0,0,0,0,252,52,0,0,0,0,0,252,52,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,244,255,255,255,255,183,0,0,0,0,14,229,90,0,0,0,0,149,181,0,0,0,0,56,240,29,0,0,0,4,210,106,0,0,0,0,120,195,1,0,0,0,34,238,39,0,0,0,0,185,122,0,0,0,0,19,255,255,255,255,255,216,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,72,255,255,52,0,0,0,72,204,0,0,0,0,0,72,204,0,0,0,0,0,72,204,0,0,0,0,0,72,204,0,0,0,0,0,72,204,0,0,0,0,0,72,204,0,0,0,0,0,72,204,0,0,0,0,0,72,204,0,0,0,0,0,72,204,0,0,0,0,0,72,255,255,52,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,46,232,8,0,0,0,0,0,184,104,0,0,0,0,0,66,219,2,0,0,0,0,0,203,84,0,0,0,0,0,86,202,0,0,0,0,0,3,220,64,0,0,0,0,0,106,182,0,0,0,0,0,9,233,45,0,0,0,0,0,126,162,0,0,0,0,0,18,239,29,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,248,255,132,0,0,0,0,0,144,132,0,0,0,0,0,144,132,0,0,0,0,0,144,132,0,0,0,0,0,144,132,0,0,0,0,0,144,132,0,0,0,0,0,144,132,0,0,0,0,0,144,132,0,0,0,0,0,144,132,0,0,0,0,0,144,132,0,0,0,0,248,255,132,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,91,250,145,0,0,0,68,215,38,186,117,0,47,206,28,0,8,183,91,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,255,255,255,255,255,255,255},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,17,203,58,0,0,0,0,0,23,194,29,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,188,255,252,212,62,0,0,0,0,5,84,232,4,0,0,0,0,0,232,41,0,95,216,249,255,255,51,25,245,61,5,0,238,52,34,244,41,12,124,252,52,0,126,237,239,125,224,52,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,224,52,0,0,0,0,0,224,52,0,0,0,0,0,224,52,0,0,0,0,0,224,126,234,226,92,0,0,224,193,21,68,247,30,0,224,82,0,0,190,102,0,224,57,0,0,166,124,0,224,81,0,0,190,101,0,224,192,20,66,245,28,0,224,128,235,226,90,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,103,216,239,152,6,0,85,230,59,15,95,49,0,182,114,0,0,0,0,0,211,80,0,0,0,0,0,182,113,0,0,0,0,0,86,228,57,14,91,49,0,0,106,217,240,145,5,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,248,28,0,0,0,0,0,248,28,0,0,0,0,0,248,28,0,50,208,244,133,248,28,2,218,117,15,145,255,28,42,244,4,0,22,255,28,64,225,0,0,0,253,28,42,244,4,0,22,255,28,2,219,115,14,143,255,28,0,51,209,244,124,248,28,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,23,171,238,219,81,0,0,191,152,15,55,234,29,34,249,10,0,0,162,102,63,255,252,253,254,255,129,34,236,1,0,0,0,0,0,193,136,18,30,133,62,0,24,169,236,226,123,5,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,107,237,255,60,0,0,3,246,45,0,0,0,0,25,248,0,0,0,0,220,255,255,255,255,60,0,0,28,248,0,0,0,0,0,28,248,0,0,0,0,0,28,248,0,0,0,0,0,28,248,0,0,0,0,0,28,248,0,0,0,0,0,28,248,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,47,208,244,130,248,28,1,215,121,15,143,255,28,41,245,4,0,22,255,28,64,226,0,0,0,253,28,41,246,5,0,23,255,28,1,215,125,15,142,254,28,0,47,209,243,124,249,23,0,0,0,0,16,251,2,0,108,71,14,135,178,0,0,30,186,242,186,28,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,220,56,0,0,0,0,0,220,56,0,0,0,0,0,220,56,0,0,0,0,0,220,121,223,238,104,0,0,220,183,19,77,242,6,0,220,76,0,0,243,31,0,220,56,0,0,236,40,0,220,56,0,0,236,40,0,220,56,0,0,236,40,0,220,56,0,0,236,40,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,208,68,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,128,255,255,68,0,0,0,0,0,208,68,0,0,0,0,0,208,68,0,0,0,0,0,208,68,0,0,0,0,0,208,68,0,0,0,0,0,208,68,0,0,0,244,255,255,255,255,104,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,124,152,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,88,255,255,152,0,0,0,0,0,124,152,0,0,0,0,0,124,152,0,0,0,0,0,124,152,0,0,0,0,0,124,152,0,0,0,0,0,124,152,0,0,0,0,0,124,152,0,0,0,0,0,128,146,0,0,0,0,8,192,106,0,0,0,232,251,184,12,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,156,128,0,0,0,0,0,156,128,0,0,0,0,0,156,128,0,0,0,0,0,156,128,0,54,227,53,0,156,128,50,226,58,0,0,156,172,236,78,0,0,0,156,244,189,166,0,0,0,156,133,16,229,85,0,0,156,128,0,74,235,24,0,156,128,0,0,158,179,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,16,255,255,192,0,0,0,0,0,84,192,0,0,0,0,0,84,192,0,0,0,0,0,84,192,0,0,0,0,0,84,192,0,0,0,0,0,84,192,0,0,0,0,0,84,192,0,0,0,0,0,79,196,0,0,0,0,0,41,239,27,0,0,0,0,0,139,244,255,16,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,92,204,229,165,172,233,49,92,204,24,247,85,127,140,92,165,0,224,37,88,163,92,160,0,220,32,84,167,92,160,0,220,32,84,168,92,160,0,220,32,84,168,92,160,0,220,32,84,168,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,220,121,223,238,104,0,0,220,183,19,77,242,6,0,220,76,0,0,243,31,0,220,56,0,0,236,40,0,220,56,0,0,236,40,0,220,56,0,0,236,40,0,220,56,0,0,236,40,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,35,190,243,210,63,0,0,198,146,15,93,238,14,22,255,19,0,0,216,76,44,250,0,0,0,190,100,22,255,19,0,0,215,77,0,200,144,14,91,240,15,0,37,192,243,211,68,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,228,137,234,224,87,0,0,228,194,21,70,246,25,0,228,82,0,0,194,97,0,228,57,0,0,170,120,0,228,81,0,0,194,98,0,228,192,20,68,246,27,0,228,129,236,226,89,0,0,228,52,0,0,0,0,0,228,52,0,0,0,0,0,228,52,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,39,201,244,146,232,48,0,201,137,15,130,255,48,22,255,17,0,9,253,48,44,249,0,0,0,238,48,23,255,17,0,9,252,48,0,204,135,14,128,254,48,0,41,202,245,135,232,48,0,0,0,0,0,232,48,0,0,0,0,0,232,48,0,0,0,0,0,232,48},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,224,137,223,254,196,0,0,224,208,42,1,0,0,0,224,82,0,0,0,0,0,224,52,0,0,0,0,0,224,52,0,0,0,0,0,224,52,0,0,0,0,0,224,52,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,35,194,244,203,49,0,0,163,152,10,50,129,0,0,159,147,5,0,0,0,0,22,150,207,191,67,0,0,0,0,0,72,237,0,0,144,66,10,90,233,0,0,47,189,245,212,70,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,124,152,0,0,0,0,0,124,152,0,0,0,60,255,255,255,255,255,12,0,0,124,152,0,0,0,0,0,124,152,0,0,0,0,0,124,152,0,0,0,0,0,122,153,0,0,0,0,0,97,202,14,0,0,0,0,13,189,247,255,12,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,220,56,0,0,236,40,0,220,56,0,0,236,40,0,220,56,0,0,236,40,0,220,56,0,0,236,40,0,212,63,0,5,251,40,0,175,146,12,120,252,40,0,50,219,241,121,236,40,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,62,220,0,0,0,166,120,2,230,48,0,7,241,36,0,147,131,0,76,206,0,0,62,214,0,159,121,0,0,2,230,46,237,36,0,0,0,148,192,207,0,0,0,0,63,255,122,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,228,41,0,0,0,1,240,173,93,0,0,0,38,227,117,145,6,246,49,90,171,61,197,63,203,116,142,115,9,240,132,71,177,193,59,0,205,218,4,181,237,8,0,148,178,0,123,203,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,19,227,58,0,23,231,54,0,70,218,11,176,126,0,0,0,145,206,199,3,0,0,0,42,255,101,0,0,0,3,197,146,230,24,0,0,125,183,0,126,183,1,54,234,27,0,4,203,109,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,55,233,4,0,0,145,146,0,219,72,0,2,231,57,0,129,164,0,67,222,0,0,38,244,11,156,133,0,0,0,203,97,239,44,0,0,0,112,236,211,0,0,0,0,24,252,123,0,0,0,0,11,244,35,0,0,0,1,121,196,0,0,0,0,235,217,52,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,172,255,255,255,255,24,0,0,0,0,110,186,2,0,0,0,54,223,21,0,0,0,18,220,61,0,0,0,1,179,119,0,0,0,0,119,180,1,0,0,0,0,208,255,255,255,255,24,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,87,225,236,0,0,0,0,207,102,3,0,0,0,0,227,52,0,0,0,0,0,230,50,0,0,0,1,53,250,22,0,0,0,180,255,139,0,0,0,0,2,74,252,21,0,0,0,0,0,238,50,0,0,0,0,0,227,52,0,0,0,0,0,207,102,2,0,0,0,0,89,226,236,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,228,28,0,0,0,0,0,228,28,0,0,0,0,0,228,28,0,0,0,0,0,228,28,0,0,0,0,0,228,28,0,0,0,0,0,228,28,0,0,0,0,0,228,28,0,0,0,0,0,228,28,0,0,0,0,0,228,28,0,0,0,0,0,228,28,0,0,0,0,0,228,28,0,0,0,0,0,228,28,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,178,234,128,0,0,0,0,1,49,254,7,0,0,0,0,0,248,27,0,0,0,0,0,246,30,0,0,0,0,0,216,103,4,0,0,0,0,83,251,240,0,0,0,0,214,126,6,0,0,0,0,246,38,0,0,0,0,0,248,27,0,0,0,0,47,254,7,0,0,0,178,236,131,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
    {0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,37,198,243,158,37,36,123,92,59,17,111,226,220,64,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0},
};

}  // namespace nmeasure::detail
