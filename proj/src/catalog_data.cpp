#include "catalog_data.hpp"

namespace pir::detail {

namespace {

const char* example1_4x9 = R"(
100011111
010001011
001011001
000100111
)";

const char* len19_6x19 = R"(
0101111011110111011
1111010111101101110
1111001111011111001
1100111110111100111
1100000001111111111
0011111111111100000
)";

const char* len20_6x20 = R"(
10000001111111110011
01000001011011001111
00100011001111100000
00010011111001010000
00001000111000111111
00000100000111111111
)";

const char* len28_9x28 = R"(
1000000001010100010110100101
0100000001110010110000101001
0010000000101010011010011001
0001000000011001001110001011
0000100001010011000011000111
0000010000110110001001100101
0000001000001110111000100011
0000000100000001111000011111
0000000010000000000111111111
)";

const char* ref_17_5_8 = R"(
11111110000010000
11110001110001000
11001101101000100
00111101100100010
10101011011100001
)";

const char* len18_5x18 = R"(
100001101100100101
010000111010010011
001000100110001111
000101100001111111
000010011111111111
)";

const char* len22_5x22 = R"(
1000010101010101010101
0100010011001100110011
0010001000111100001111
0001001000000011111111
0000100111111111111111
)";

const char* len25_5x25 = R"(
1000011101010101010010101
0100001011001111001001101
0010011000111100111000011
0001000111111100000111111
0000100000000011111111111
)";

const char* len28_5x28 = R"(
1000011011001010101010110101
0100010110100111100110010011
0010001110011110011110001111
0001000001111110000001111111
0000100000000001111111111111
)";

const char* const cert_example1_4x9 = R"json({"k":4,"n":9,"s":4,"sets":[[[0],[1,2,5],[3,6],[4,7,8]],[[1],[0,2,5],[3,4,8],[6,7]],[[2],[0,4],[1,6,8],[3,5,7]],[[3],[0,6],[5,8],[1,2,4,7]]]})json";

const char* const cert_len18_5x18 = R"json({"k":8,"n":18,"s":5,"sets":[[[0],[7,8],[4,6,16],[3,5],[1,9,10],[2,13,17],[11,12],[14,15]],[[1],[4,7],[3,8,12],[2,5,6],[0,9,10],[11,13],[14,16],[15,17]],[[2],[0,4,9],[11,14],[1,5,6],[3,8,17],[7,10],[12,15],[13,16]],[[3],[9,15],[6,11,17],[0,5],[1,8,12],[2,4,14],[7,13],[10,16]],[[4],[0,2,9],[3,11],[1,7],[8,15,16],[10,13,14],[5,12],[6,17]]]})json";

const char* const cert_len22_5x22 = R"json({"k":10,"n":22,"s":5,"sets":[[[0],[4,7],[8,9],[2,14,19],[3,11,18],[20,21],[1,5],[6,10,15],[12,13],[16,17]],[[1],[4,8],[7,9],[2,14,20],[3,12,18],[19,21],[0,5],[6,10,16],[11,13],[15,17]],[[2],[4,10],[14,18],[0,8,13],[1,9,11],[17,21],[3,6],[5,7,12],[15,19],[16,20]],[[3],[4,14],[10,18],[0,8,17],[1,9,15],[13,21],[2,6],[5,7,16],[11,19],[12,20]],[[4],[0,7],[1,8],[2,10],[3,14],[5,9],[6,18],[11,16,21],[12,17,19],[13,15,20]]]})json";

const char* const cert_len25_5x25 = R"json({"k":12,"n":25,"s":5,"sets":[[[0],[2,5],[3,7],[4,6,18],[1,23,24],[8,9],[14,15],[10,11],[19,20],[12,13],[16,17],[21,22]],[[1],[5,6],[7,9],[3,8],[4,14],[2,15,17],[0,23,24],[10,12],[19,21],[11,13],[16,18],[20,22]],[[2],[0,5],[7,11],[8,12],[14,18],[1,15,17],[6,20,21],[3,10],[19,23],[4,16],[9,13],[22,24]],[[3],[5,11],[0,7],[1,8],[14,21],[12,20,24],[9,17,18],[2,10],[4,19],[6,13],[15,22],[16,23]],[[4],[5,17],[7,20],[0,6,18],[11,12,15],[1,14],[8,21],[3,19],[10,23],[2,16],[9,22],[13,24]]]})json";

const char* const cert_len28_5x28 = R"json({"k":14,"n":28,"s":5,"sets":[[[0],[1,5],[2,6],[11,12],[4,10,23],[15,16],[17,18],[24,25],[3,9],[7,8],[26,27],[13,14],[19,20],[21,22]],[[1],[0,5],[2,7],[11,13],[4,15],[9,16,21],[18,20],[25,27],[3,10],[6,8],[24,26],[12,14],[17,19],[22,23]],[[2],[0,6],[1,7],[3,11],[4,17],[14,18,26],[16,20],[22,25],[5,8],[9,12],[23,27],[10,13],[15,19],[21,24]],[[3],[0,9],[2,11],[7,13],[4,21],[5,15,22],[18,25],[20,27],[1,10],[6,12],[19,26],[8,14],[16,23],[17,24]],[[4],[1,15],[2,17],[8,20],[0,10,23],[3,21],[12,25],[13,26],[5,16],[6,18],[11,24],[7,19],[9,22],[14,27]]]})json";

const char* const cert_len19_6x19 = R"json({"k":8,"n":19,"s":6,"sets":[[[0,1],[7,8],[12,13],[4,11,14],[2,3],[5,9,18],[6,10,15],[16,17]],[[6,8],[11,13],[2,12,16],[1,18],[0,3,10],[4,5],[7,9,17],[14,15]],[[5,8],[10,13],[2,9,14],[1,17],[4,6],[7,11,15],[0,16],[3,12,18]],[[3,8],[9,13],[1,15],[4,10,16],[0,5,11],[2,7],[6,12,17],[14,18]],[[8,13],[0,14,17],[1,2,4],[5,10],[7,12],[15,16,18],[3,9],[6,11]],[[1,13],[3,4,7],[8,14,16],[0,12],[2,5,6],[9,15],[10,17],[11,18]]]})json";

const char* const cert_len20_6x20 = R"json({"k":8,"n":20,"s":6,"sets":[[[0],[1,6,7],[2,5,11],[3,4,8],[9,13,14],[10,12,15],[16,18],[17,19]],[[0,6,7],[1],[8,9],[2,14,18],[11,12],[3,15,19],[4,5,16],[10,13,17]],[[0,5,11],[2],[3,6],[9,10],[1,14,18],[4,12,19],[7,15,16],[8,13,17]],[[0,4,8],[3],[2,6],[5,9,18],[12,13],[1,15,19],[7,14,16],[10,11,17]],[[0,3,8],[4],[7,10],[2,12,18],[6,13,19],[11,14],[1,5,16],[9,15,17]],[[0,2,11],[5],[7,13],[3,9,18],[6,10,19],[8,15],[1,4,16],[12,14,17]]]})json";

const char* const cert_len28_9x28 = R"json({"k":10,"n":28,"s":9,"sets":[[[0],[1,4,9],[2,16,17],[3,8,19],[5,6,13],[7,21,25],[10,26,27],[11,12,14],[15,20,23],[18,22,24]],[[0,4,9],[1],[2,5,10],[3,23,24],[6,7,16],[8,13,22],[11,19,21],[12,25,27],[14,15,18],[17,20,26]],[[0,16,17],[1,5,10],[2],[3,6,12],[4,19,20],[7,8,23],[9,13,14],[11,24,25],[15,22,27],[18,21,26]],[[0,8,19],[1,23,24],[2,6,12],[3],[4,7,15],[5,9,11],[10,16,18],[13,25,26],[14,20,22],[17,21,27]],[[0,1,9],[2,19,20],[3,7,15],[4],[5,8,21],[6,10,14],[11,17,18],[12,23,26],[13,24,27],[16,22,25]],[[0,6,13],[1,2,10],[3,9,11],[4,8,21],[5],[7,12,18],[14,24,26],[15,19,25],[16,20,27],[17,22,23]],[[0,5,13],[1,7,16],[2,3,12],[4,10,14],[6],[8,15,26],[9,21,22],[11,23,27],[17,19,24],[18,20,25]],[[0,21,25],[1,6,16],[2,8,23],[3,4,15],[5,12,18],[7],[9,20,24],[10,13,17],[11,22,26],[14,19,27]],[[0,3,19],[1,13,22],[2,7,23],[4,5,21],[6,15,26],[8],[9,18,27],[10,11,20],[12,16,24],[14,17,25]]]})json";

}  // namespace

const RawEntry raw_catalog[] = {
    {"example1-4x9", 4, 4, 9, 0, "worked example attaining the (4,4) optimum 9", example1_4x9, cert_example1_4x9},
    {"len18-5x18", 5, 8, 18, 0, "length-18 8-PIR code of dimension 5", len18_5x18, cert_len18_5x18},
    {"len22-5x22", 5, 10, 22, 0, "length-22 10-PIR code of dimension 5", len22_5x22, cert_len22_5x22},
    {"len25-5x25", 5, 12, 25, 0, "length-25 12-PIR code of dimension 5", len25_5x25, cert_len25_5x25},
    {"len28-5x28", 5, 14, 28, 0, "length-28 14-PIR code of dimension 5", len28_5x28, cert_len28_5x28},
    {"ref-17-5-8", 5, 8, 17, 1,
     "[17,5,8] distance benchmark; minimum distance 8 but provably not 8-PIR", ref_17_5_8, ""},
    {"len19-6x19", 6, 8, 19, 0, "non-systematic length-19 8-PIR code of dimension 6", len19_6x19, cert_len19_6x19},
    {"len20-6x20", 6, 8, 20, 0, "systematic length-20 8-PIR code of dimension 6", len20_6x20, cert_len20_6x20},
    {"len28-9x28", 9, 10, 28, 0, "length-28 10-PIR code of dimension 9", len28_9x28, cert_len28_9x28},
};

const int raw_catalog_size = static_cast<int>(sizeof(raw_catalog) / sizeof(raw_catalog[0]));

}  // namespace pir::detail
