"""Frozen test vectors: the RSA-100 and RSA-220 worked examples.

RSA challenge numbers are public; the index lists and partition layouts
are the expected outputs for deconstruction and partitioned multiplication.
"""

RSA100_SEMIPRIME = int(
    "152260502792253336053561837813263742971806811496138068865790"
    "8494580122963258952897654000350692006139"
)
RSA100_FACTOR_A = 37975227936943673922808872755445627854565536638199
RSA100_FACTOR_B = 40094690950920881030683735292761468389214899724061
RSA100_FACTOR_SUM = 78069918887864554953492608048207096243780436362260

RSA100_SEMIPRIME_INDEXES = [
    329, 327, 326, 323, 319, 318, 316, 314, 312, 311, 308, 307, 305, 303, 302, 301, 300, 298,
    294, 293, 292, 291, 290, 287, 280, 279, 277, 275, 273, 272, 269, 268, 266, 265, 264, 261,
    258, 256, 255, 253, 252, 250, 246, 245, 244, 241, 239, 237, 236, 235, 234, 233, 230, 224,
    222, 221, 220, 219, 218, 217, 213, 212, 211, 209, 208, 207, 206, 205, 204, 202, 201, 200,
    199, 197, 195, 193, 192, 191, 186, 184, 182, 177, 176, 175, 172, 171, 169, 167, 166, 165,
    164, 162, 161, 160, 157, 154, 153, 151, 150, 149, 147, 146, 144, 141, 140, 139, 138, 136,
    135, 134, 133, 132, 131, 130, 128, 127, 126, 125, 124, 122, 121, 118, 117, 114, 111, 107,
    104, 103, 102, 100, 96, 94, 92, 90, 88, 87, 86, 84, 83, 82, 75, 73, 72, 70,
    69, 68, 66, 65, 64, 60, 59, 58, 54, 53, 52, 51, 49, 46, 44, 39, 38, 37,
    35, 34, 33, 32, 30, 29, 28, 27, 26, 22, 20, 19, 18, 17, 14, 12, 11, 7,
    6, 5, 4, 3, 1, 0,
]
RSA100_FACTOR_A_INDEXES = [
    164, 163, 160, 159, 158, 157, 156, 155, 153, 152, 151, 150, 148, 146, 140, 139, 138, 136,
    134, 133, 131, 128, 127, 125, 123, 121, 117, 116, 115, 114, 112, 111, 106, 105, 95, 92,
    91, 89, 87, 84, 82, 81, 78, 77, 76, 75, 74, 72, 71, 69, 68, 65, 64, 61,
    60, 58, 57, 56, 55, 52, 51, 50, 46, 45, 41, 40, 39, 38, 35, 34, 32, 30,
    28, 20, 19, 18, 17, 16, 13, 10, 7, 6, 5, 4, 2, 1, 0,
]
RSA100_FACTOR_B_INDEXES = [
    164, 163, 161, 160, 158, 157, 155, 154, 153, 152, 148, 146, 140, 139, 138, 137, 136, 135,
    132, 131, 127, 126, 125, 123, 122, 121, 119, 117, 116, 114, 113, 108, 107, 104, 103, 101,
    100, 99, 98, 89, 88, 86, 85, 77, 73, 64, 62, 61, 55, 53, 50, 48, 47, 46,
    45, 44, 42, 41, 40, 38, 36, 35, 34, 33, 31, 29, 22, 21, 20, 19, 18, 15,
    14, 12, 11, 10, 9, 8, 4, 3, 2, 0,
]
RSA100_FACTOR_SUM_INDEXES = [
    165, 164, 162, 160, 158, 157, 155, 153, 151, 150, 149, 147, 141, 140, 139, 138, 136, 129,
    127, 124, 123, 119, 118, 117, 116, 113, 112, 111, 108, 107, 106, 105, 104, 103, 101, 100,
    99, 98, 95, 92, 91, 90, 88, 87, 86, 85, 84, 82, 81, 79, 76, 75, 74, 73,
    72, 71, 69, 68, 66, 63, 60, 59, 54, 49, 46, 44, 43, 41, 40, 37, 35, 33,
    32, 31, 30, 29, 28, 23, 20, 19, 18, 10, 4, 2,
]

RSA220_PRIME_A = int(
    "686365641226756627438237149928843780013084223997916484462124"
    "49933215410614414642667938213644208420192054999687"
)
RSA220_PRIME_B = int(
    "329290743948634981204930154921293529191645519653623395246268"
    "60511692903493094652463337824866390738191765712603"
)
RSA220_SEMIPRIME = int(
    "226013852620340578494165404861019751350803891571977671832119"
    "776810944564181796667660859312130658257725063156288667697044"
    "807000181114971186300211248792819948748206607013106658664608"
    "3327982803560379205391980139946496955261"
)

RSA220_PRIME_A_INDEXES = [
    364, 363, 362, 360, 357, 356, 355, 352, 351, 349, 346, 343, 342, 341, 340, 338, 337, 332,
    330, 328, 323, 322, 319, 315, 314, 312, 310, 308, 305, 301, 298, 295, 290, 289, 288, 285,
    284, 282, 281, 280, 279, 277, 274, 272, 269, 268, 265, 264, 263, 261, 258, 257, 256, 255,
    254, 252, 250, 247, 246, 240, 239, 238, 237, 235, 234, 231, 230, 229, 228, 224, 222, 219,
    218, 217, 214, 213, 209, 207, 205, 204, 202, 198, 197, 196, 195, 192, 191, 189, 188, 187,
    185, 183, 182, 180, 179, 177, 175, 174, 173, 170, 168, 166, 164, 163, 162, 159, 158, 155,
    154, 153, 152, 149, 145, 144, 143, 136, 134, 133, 132, 129, 126, 124, 122, 121, 116, 114,
    113, 112, 109, 106, 105, 104, 102, 101, 100, 97, 96, 95, 94, 91, 90, 88, 87, 84,
    83, 82, 81, 80, 79, 74, 72, 71, 69, 67, 66, 65, 64, 63, 62, 60, 54, 53,
    48, 45, 43, 40, 33, 32, 31, 29, 27, 26, 21, 18, 15, 14, 13, 12, 11, 9,
    7, 2, 1, 0,
]
RSA220_PRIME_B_INDEXES = [
    363, 362, 361, 354, 352, 350, 349, 346, 343, 341, 340, 333, 332, 331, 330, 329, 328, 327,
    326, 325, 320, 318, 314, 313, 310, 308, 307, 306, 299, 297, 295, 289, 287, 285, 283, 280,
    278, 272, 271, 260, 259, 258, 256, 255, 254, 253, 252, 251, 250, 247, 246, 245, 244, 241,
    240, 239, 237, 236, 234, 233, 232, 231, 230, 227, 226, 224, 223, 222, 215, 213, 212, 211,
    210, 209, 207, 206, 205, 204, 203, 200, 198, 195, 190, 189, 187, 186, 185, 181, 180, 179,
    177, 176, 175, 171, 170, 169, 166, 164, 161, 160, 158, 157, 156, 154, 153, 152, 149, 148,
    147, 146, 144, 143, 138, 136, 134, 133, 130, 129, 128, 127, 122, 121, 118, 115, 112, 109,
    108, 105, 103, 102, 101, 100, 98, 97, 95, 94, 93, 92, 91, 89, 88, 87, 86, 85,
    82, 80, 79, 75, 73, 71, 68, 67, 62, 61, 60, 59, 56, 55, 53, 52, 51, 48,
    47, 45, 44, 43, 42, 41, 40, 39, 32, 27, 26, 23, 21, 18, 17, 16, 15, 13,
    11, 10, 9, 7, 6, 4, 3, 1, 0,
]

RSA220_A_PARTITIONS = [
    [0, 1, 2, 7, 9, 11, 12, 13, 14],
    [15, 18, 21, 26, 27, 29, 31, 32, 33],
    [40, 43, 45, 48, 53, 54, 60, 62, 63],
    [64, 65, 66, 67, 69, 71, 72, 74, 79],
    [80, 81, 82, 83, 84, 87, 88, 90, 91],
    [94, 95, 96, 97, 100, 101, 102, 104, 105],
    [106, 109, 112, 113, 114, 116, 121, 122, 124],
    [126, 129, 132, 133, 134, 136, 143, 144, 145],
    [149, 152, 153, 154, 155, 158, 159, 162, 163],
    [164, 166, 168, 170, 173, 174, 175, 177, 179],
    [180, 182, 183, 185, 187, 188, 189, 191, 192],
    [195, 196, 197, 198, 202, 204, 205, 207, 209],
    [213, 214, 217, 218, 219, 222, 224, 228, 229],
    [230, 231, 234, 235, 237, 238, 239, 240, 246],
    [247, 250, 252, 254, 255, 256, 257, 258, 261],
    [263, 264, 265, 268, 269, 272, 274, 277, 279],
    [280, 281, 282, 284, 285, 288, 289, 290, 295],
    [298, 301, 305, 308, 310, 312, 314, 315, 319],
    [322, 323, 328, 330, 332, 337, 338, 340, 341],
    [342, 343, 346, 349, 351, 352, 355, 356, 357],
    [360, 362, 363, 364],
]

RSA220_B_PARTITIONS = [
    [0, 1, 3, 4, 6, 7, 9, 10, 11],
    [13, 15, 16, 17, 18, 21, 23, 26, 27],
    [32, 39, 40, 41, 42, 43, 44, 45, 47],
    [48, 51, 52, 53, 55, 56, 59, 60, 61],
    [62, 67, 68, 71, 73, 75, 79, 80, 82],
    [85, 86, 87, 88, 89, 91, 92, 93, 94],
    [95, 97, 98, 100, 101, 102, 103, 105, 108],
    [109, 112, 115, 118, 121, 122, 127, 128, 129],
    [130, 133, 134, 136, 138, 143, 144, 146, 147],
    [148, 149, 152, 153, 154, 156, 157, 158, 160],
    [161, 164, 166, 169, 170, 171, 175, 176, 177],
    [179, 180, 181, 185, 186, 187, 189, 190, 195],
    [198, 200, 203, 204, 205, 206, 207, 209, 210],
    [211, 212, 213, 215, 222, 223, 224, 226, 227],
    [230, 231, 232, 233, 234, 236, 237, 239, 240],
    [241, 244, 245, 246, 247, 250, 251, 252, 253],
    [254, 255, 256, 258, 259, 260, 271, 272, 278],
    [280, 283, 285, 287, 289, 295, 297, 299, 306],
    [307, 308, 310, 313, 314, 318, 320, 325, 326],
    [327, 328, 329, 330, 331, 332, 333, 340, 341],
    [343, 346, 349, 350, 352, 354, 361, 362, 363],
]

FIRST_TASK_PRODUCT_INDEXES = [26, 25, 24, 20, 19, 18, 13, 12, 9, 8, 6, 5, 4, 3, 2, 0]
FIRST_TASK_PRODUCT = 119288701
