// Generated from the published tables; cells are transcribed as printed.
#pragma once

#include <array>
#include <string_view>

namespace sciprofile::fixture_data {

inline constexpr std::string_view kTable1World = R"csv(iso2,name,region,Agricultural and Biological Sciences,Arts and Humanities,"Biochemistry, Genetics and Molecular Biology","Business, Management and Accounting",Chemical Engineering,Chemistry,Computer Science,Decision Sciences,Dentistry,Herat and Planetary Sciences,"Economics, Econometrics and Finance",Energy,Engineering,Environmental Science,Health Professions,Immunology and Microbiology,Materials Science,Mathematics,Medicine,Multidisciplinary,Neuroscience,Nursing,"Pharmacology, Toxicology and Pharmaceutics",Physics and Astronomy,Psychology,Social Sciences,Veterinary
WD,World,World,7.0,0.4,12.8,1.9,4.4,7.4,4.6,0.5,0.5,4.6,1.0,1.9,16.2,4.1,1.6,3.7,7.4,3.7,28.6,1.1,3.1,1.2,4.0,11.0,2.0,4.1,1.0
)csv";

inline constexpr std::string_view kAnnexALoadings = R"csv(iso2,name,factor1,factor2,factor3
LB,Lebanon,0.92467,0.19387,0.25991
TR,Turkey,0.89709,0.24419,0.31034
SA,Saudi Arabia,0.87953,0.32487,0.22043
NL,Netherlands,0.87445,0.32050,0.34683
GB,United Kingdom,0.86770,0.33396,0.34381
LU,Luxembourg,0.85810,0.20508,0.42848
AT,Austria,0.85757,0.40060,0.29656
JM,Jamaica,0.84666,0.06673,0.48084
US,United States,0.84638,0.37895,0.32039
IT,Italy,0.82231,0.48718,0.25327
KW,Kuwait,0.82200,0.35742,0.22726
SE,Sweden,0.82046,0.41437,0.35441
BE,Belgium,0.81550,0.45586,0.33824
IL,Israel,0.81087,0.47704,0.25477
TH,Thailand,0.80618,0.25986,0.48608
DK,Denmark,0.80126,0.30848,0.47289
NP,Nepal,0.79450,0.03566,0.58045
GR,Greece,0.79434,0.51487,0.28949
CH,Switzerland,0.79202,0.49887,0.28768
AE,United Arab Emirates,0.78902,0.39866,0.28922
IE,Ireland,0.78898,0.43793,0.41308
AU,Australia,0.78805,0.27438,0.53131
FI,Finland,0.78711,0.42914,0.40994
NO,Norway,0.78073,0.24698,0.54418
TN,Tunisia,0.77347,0.51592,0.30319
CA,Canada,0.77243,0.42685,0.41129
ES,Spain,0.75675,0.47384,0.41299
DE,Germany,0.74138,0.58842,0.26008
OM,Oman,0.73985,0.40356,0.40323
FR,France,0.73444,0.59233,0.29192
PK,Pakistan,0.73443,0.33176,0.52730
HR,Croatia,0.73010,0.42795,0.43937
IS,Iceland,0.72747,0.14003,0.58990
CI,Cote D'ivoire,0.72380,0.02557,0.64852
TT,Trinidad and Tobago,0.69249,0.11955,0.68679
SN,Senegal,0.67439,0.03392,0.68061
UG,Uganda,0.66277,0.13039,0.67246
PE,Peru,0.65234,0.10887,0.72990
JP,Japan,0.64546,0.70720,0.21064
BR,Brazil,0.64052,0.54834,0.50458
CU,Cuba,0.63076,0.41924,0.56286
CZ,Czech Republic,0.61223,0.63943,0.40641
CO,Colombia,0.58455,0.48238,0.60595
ZW,Zimbabwe,0.58219,0.05558,0.79406
TZ,Tanzania,0.57698,0.09193,0.77682
NZ,New Zealand,0.57635,0.18053,0.76857
HK,Hong Kong,0.57169,0.68831,0.04482
MA,Morocco,0.56322,0.67458,0.35196
JO,Jordan,0.56021,0.62782,0.39138
UY,Uruguay,0.51873,0.36598,0.68127
HU,Hungary,0.51829,0.70695,0.30691
GH,Ghana,0.51584,0.03078,0.81729
BD,Bangladesh,0.50957,0.42683,0.71483
ZA,South Africa,0.50733,0.25029,0.80199
TW,Taiwan,0.50597,0.76396,0.06906
MY,Malaysia,0.50399,0.69412,0.44074
CL,Chile,0.49063,0.49996,0.60518
NG,Nigeria,0.48891,0.08240,0.85301
CY,Cyprus,0.47780,0.64783,0.07453
VE,Venezuela,0.47627,0.61957,0.59047
AR,Argentina,0.47399,0.50996,0.65098
PL,Poland,0.46670,0.80981,0.25086
LK,Sri Lanka,0.46479,0.21039,0.84216
MX,Mexico,0.45190,0.68104,0.53514
IR,Iran,0.43121,0.77596,0.22445
MK,Macedonia,0.43044,0.81333,0.11868
BG,Bulgaria,0.42895,0.82979,0.22177
VN,Viet Nam,0.42416,0.50246,0.64625
SI,Slovenia,0.41467,0.85284,0.17974
SK,Slovakia,0.41401,0.72311,0.42880
IN,India,0.41397,0.74815,0.45707
PT,Portugal,0.40664,0.81991,0.36963
PR,Puerto Rico,0.39810,0.63713,0.62695
SG,Singapore,0.38912,0.78631,0.02799
CM,Cameroon,0.38879,0.19096,0.86019
EE,Estonia,0.37345,0.61711,0.56555
KR,Korea,0.33158,0.89865,0.02964
KE,Kenya,0.33150,0.04850,0.90155
ET,Ethiopia,0.30266,0.00376,0.93510
EG,Egypt,0.28499,0.84194,0.25620
ID,Indonesia,0.27314,0.29796,0.90196
CN,China,0.17828,0.90043,0.01622
GE,Georgia,0.16793,0.83903,0.05494
PH,Philippines,0.15096,0.09811,0.95761
LT,Lithuania,0.13806,0.96545,0.11202
CR,Costa Rica,0.13630,0.07584,0.96094
LV,Latvia,0.10271,0.96660,0.04230
RO,Romania,0.07779,0.96640,0.07187
SY,Syrian Arab Republic,0.06258,0.38019,0.87810
BW,Botswana,0.05346,0.12986,0.79712
UA,Ukraine,0.04024,0.96722,0.07541
RU,Russian Federation,0.02751,0.95079,0.02091
DZ,Algeria,0.01103,0.96040,0.00098
)csv";

inline constexpr std::string_view kAnnexBF1 = R"csv(iso2,name,region,Agricultural and Biological Sciences,Arts and Humanities,"Biochemistry, Genetics and Molecular Biology","Business, Management and Accounting",Chemical Engineering,Chemistry,Computer Science,Decision Sciences,Dentistry,Earth and Planetary Sciences,"Economics, Econometrics and Finance",Energy,Engineering,Environmental Science,Health Professions,Immunology and Microbiology,Materials Science,Mathematics,Medicine,Multidisciplinary,Neuroscience,Nursing,"Pharmacology, Toxicology and Pharmaceutics",Physics and Astronomy,Psychology,Social Sciences,Veterinary
US,United States,Northern America,5.5,0.3,12.2,0.9,1.7,4.0,3.1,0.4,0.4,3.4,0.9,0.8,9.1,3.2,1.7,3.4,2.4,,21.4,1.0,3.2,1.1,2.9,7.2,2.4,3.4,0.7
UK,United Kingdom,Western Europe,5.5,0.5,10.2,1.1,1.6,4.5,2.5,0.4,0.5,3.8,1.0,0.8,7.8,3.2,3.8,3.6,2.2,,23.1,0.8,3.2,1.2,2.8,7.2,2.2,4.3,1.0
IT,Italy,Western Europe,4.4,0.1,11.9,0.2,1.9,5.9,3.2,0.3,0.3,4.0,0.4,0.7,8.4,2.2,0.9,3.1,3.8,,23.5,0.3,3.4,0.3,3.3,11.1,0.9,0.8,0.5
NL,Netherlands,Western Europe,5.7,0.3,10.8,0.8,2.2,4.2,2.6,0.6,0.4,3.9,1.0,0.7,7.0,3.6,1.4,4.3,2.4,,23.9,0.5,3.1,0.6,2.9,7.5,2.4,2.8,1.0
SE,Sweden,Western Europe,6.0,0.1,12.3,0.5,2.2,4.9,2.3,0.2,0.9,3.1,0.6,0.9,7.9,4.3,1.3,4.4,1.9,,21.9,0.5,3.3,0.8,2.8,8.5,1.4,2.0,0.7
BE,Belgium,Western Europe,6.1,0.2,10.8,0.5,2.0,5.7,3.0,0.5,0.3,2.8,0.7,0.7,7.9,3.0,1.6,4.2,3.1,,22.1,0.3,2.4,0.4,3.0,9.5,1.5,1.7,1.4
TR,Turkey,Middle East,6.0,0.1,7.2,0.5,3.2,5.5,2.3,0.5,1.1,2.7,0.4,1.6,7.1,3.7,1.5,1.9,4.8,,32.3,0.2,2.0,0.2,3.1,5.6,0.7,1.2,2.0
IL,Israel,Middle East,5.0,0.4,10.7,0.6,2.9,4.3,4.3,0.7,0.6,2.4,0.8,0.5,7.5,2.0,1.1,3.2,5.7,,21.0,0.7,3.1,0.4,2.0,11.0,2.4,3.0,0.5
DK,Denmark,Western Europe,8.6,0.2,13.1,0.6,1.6,4.6,2.1,0.3,0.6,4.1,0.7,0.9,5.4,4.8,1.1,5.4,2.4,,23.1,0.5,2.6,0.4,2.8,7.9,0.9,1.9,1.3
AT,Austria,Western Europe,5.1,0.1,10.9,0.6,1.7,5.4,2.9,0.4,0.3,3.5,0.6,1.1,6.8,3.1,1.6,3.5,3.2,,25.3,0.4,2.9,0.4,2.5,9.6,1.1,1.3,0.8
TH,Thailand,Asiatic Region,10.1,0.1,8.3,0.7,2.8,5.3,2.6,0.4,0.8,2.0,0.4,1.5,9.8,3.9,0.7,4.4,1.2,,26.0,0.6,0.7,0.6,3.7,3.2,0.3,1.9,1.0
SA,Saudi Arabia,Middle East,3.8,0.1,5.7,0.5,4.0,6.0,3.1,1.0,1.0,2.7,0.2,3.6,11.7,3.0,0.8,4.0,4.1,,28.7,1.0,1.5,0.3,4.0,4.8,0.2,1.3,1.0
KW,Kuwait,Middle East,3.6,0.1,6.7,0.6,6.1,5.5,3.2,1.2,1.1,3.0,0.4,3.8,12.5,4.5,0.7,3.4,5.1,,21.1,2.3,1.2,0.3,3.3,2.9,1.6,2.3,0.4
JM,Jamaica,Latin America,11.0,0.2,7.9,0.5,0.7,7.0,0.6,0.3,0.5,6.4,1.1,0.7,3.0,4.4,0.5,3.6,1.3,,37.1,0.4,0.9,0.4,2.8,2.0,0.7,5.1,0.1
WD,World,World,7.0,0.4,12.9,2.0,4.4,7.4,4.8,0.5,0.5,4.5,1.0,1.9,16.1,4.1,1.6,3.7,7.4,,28.6,1.1,3.1,1.2,3.9,11.0,2.0,4.2,1.0
)csv";
inline constexpr std::array<std::string_view, 15> kAnnexBF1Suspect = {"US", "UK", "IT", "NL", "SE", "BE", "TR", "IL", "DK", "AT", "TH", "SA", "KW", "JM", "WD"};

inline constexpr std::string_view kAnnexBF2 = R"csv(iso2,name,region,Agricultural and Biological Sciences,Arts and Humanities,"Biochemistry, Genetics and Molecular Biology","Business, Management and Accounting",Chemical Engineering,Chemistry,Computer Science,Decision Sciences,Dentistry,Earth and Planetary Sciences,"Economics, Econometrics and Finance",Energy,Engineering,Environmental Science,Health Professions,Immunology and Microbiology,Materials Science,Mathematics,Medicine,Multidisciplinary,Neuroscience,Nursing,"Pharmacology, Toxicology and Pharmaceutics",Physics and Astronomy,Psychology,Social Sciences,Veterinary
CN,China,Asiatic Region,3.4,0.0,5.8,1.2,4.7,8.8,4.8,0.3,0.0,4.8,0.1,2.4,22.0,2.3,0.1,0.9,11.2,3.8,6.7,1.1,0.5,0.1,2.1,12.1,0.1,0.6,0.1
RU,Russian Fed.,Eastern Europe,3.0,0.0,7.3,0.3,3.5,12.9,1.5,0.1,0.0,7.1,0.1,1.8,11.7,1.9,0.1,1.5,11.5,4.6,2.3,0.8,0.7,1.2,,25.4,0.3,0.4,0.0
KR,Korea,Asiatic Region,2.9,0.0,10.0,0.5,4.6,7.6,5.8,0.6,0.2,1.5,0.3,1.3,17.1,1.7,0.9,3.0,10.5,3.7,8.9,0.1,1.2,0.1,,12.8,0.3,0.7,0.3
PL,Poland,Eastern Europe,5.4,0.1,9.6,0.5,3.6,10.2,2.2,0.4,0.0,4.3,0.1,0.7,7.8,3.2,0.3,2.1,7.8,4.2,14.0,0.1,1.7,0.1,,16.3,0.2,0.7,1.5
PT,Portugal,Western Europe,8.0,0.1,9.8,0.6,4.5,8.6,3.9,0.6,0.1,3.3,0.6,1.1,10.7,4.0,0.4,3.2,8.0,4.3,11.0,0.2,1.5,0.1,2.4,10.6,0.6,1.4,0.4
EG,Egypt,Africa,6.5,0.1,6.4,0.5,4.2,15.1,2.3,0.5,0.3,3.1,0.1,2.6,12.6,3.3,0.2,2.2,9.8,4.0,10.1,0.3,0.4,0.0,4.3,9.2,0.1,0.6,0.9
RO,Romania,Eastern Europe,1.3,0.0,4.0,1.3,6.1,13.0,3.0,0.4,0.1,2.0,0.1,1.3,13.8,2.1,0.2,0.5,14.1,8.4,5.6,0.1,0.3,0.0,1.0,20.4,0.2,0.4,0.1
LT,Lithuania,Eastern Europe,4.7,0.0,6.7,1.9,2.7,9.6,3.9,0.6,0.1,3.0,0.7,1.3,11.9,4.3,0.3,2.2,10.2,6.4,6.3,0.1,0.7,0.1,1.5,18.1,0.3,1.4,0.9
DZ,Algeria,Africa,4.5,0.1,3.8,0.1,5.5,8.2,5.7,0.5,0.0,3.3,0.0,2.4,17.8,2.5,0.2,0.8,14.6,6.5,3.5,0.7,0.4,0.0,1.0,17.3,0.1,0.5,0.2
LV,Latvia,Eastern Europe,3.6,0.0,7.3,0.5,3.1,11.6,4.2,0.3,0.1,1.9,0.1,1.8,13.2,2.6,0.6,2.6,13.4,2.5,5.7,0.1,0.8,0.0,1.6,20.9,0.3,0.8,0.2
MK,Macedonia,Eastern Europe,3.4,0.0,10.9,1.1,2.7,17.2,3.2,0.2,0.1,1.4,0.4,1.1,14.7,1.1,0.1,0.8,7.0,4.0,13.3,0.3,0.3,0.2,3.4,11.1,0.4,1.2,0.4
WD,World,World,7.0,0.4,12.9,2.0,4.4,7.4,4.8,0.5,0.5,4.5,1.0,1.9,16.1,4.1,1.6,3.7,7.4,3.8,28.6,1.1,3.1,1.2,3.9,11.0,2.0,4.2,1.0
)csv";
inline constexpr std::array<std::string_view, 3> kAnnexBF2Suspect = {"RU", "KR", "PL"};

inline constexpr std::string_view kAnnexBF3 = R"csv(iso2,name,region,Agricultural and Biological Sciences,Arts and Humanities,"Biochemistry, Genetics and Molecular Biology","Business, Management and Accounting",Chemical Engineering,Chemistry,Computer Science,Decision Sciences,Dentistry,Earth and Planetary Sciences,"Economics, Econometrics and Finance",Energy,Engineering,Environmental Science,Health Professions,Immunology and Microbiology,Materials Science,Mathematics,Medicine,Multidisciplinary,Neuroscience,Nursing,"Pharmacology, Toxicology and Pharmaceutics",Physics and Astronomy,Psychology,Social Sciences,Veterinary
NG,Nigeria,Africa,19.0,0.2,9.1,0.7,1.9,4.5,1.1,0.2,0.6,4.2,1.0,1.5,3.6,7.0,0.7,5.2,2.1,1.6,18.2,1.8,0.6,1.0,5.0,1.6,0.6,4.9,2.1
KE,Kenya,Africa,24.3,0.1,12.1,0.4,0.4,2.0,0.1,0.0,0.1,3.1,1.0,0.7,1.3,8.6,0.5,12.9,0.5,0.2,16.4,1.5,0.4,0.4,2.0,0.7,0.5,4.7,5.1
ID,Indonesia,Asiatic Region,19.2,0.1,6.6,0.8,2.6,5.2,1.3,0.4,,6.4,1.4,1.7,7.3,7.8,0.3,5.6,4.0,1.1,12.5,0.5,0.3,0.5,2.7,4.9,0.4,4.6,1.4
PH,Philippines,Asiatic Region,31.5,0.1,7.3,0.8,0.9,2.5,1.1,0.1,0.3,5.5,1.6,1.4,4.0,6.8,0.4,4.5,1.2,1.7,13.6,0.4,0.6,0.7,1.8,3.9,0.7,5.3,1.3
ET,Ethiopia,Africa,26.0,0.1,9.3,0.2,0.4,4.3,0.4,0.1,0.1,5.3,2.6,0.6,1.6,7.1,0.2,8.5,0.9,0.5,16.7,0.4,0.8,0.2,1.7,1.3,0.3,3.9,6.5
CM,Cameroon,Africa,20.0,0.1,6.8,0.2,1.0,6.8,0.8,0.1,0.0,3.9,0.9,0.6,2.9,5.4,0.4,11.5,1.7,2.5,16.5,0.5,0.5,0.2,5.2,6.3,0.3,3.2,1.5
LK,Sri Lanka,Asiatic Region,17.5,0.0,6.5,1.1,1.7,5.0,1.5,0.1,1.2,4.0,0.9,2.0,5.9,9.3,0.4,5.4,3.3,1.2,17.1,0.9,0.8,0.4,2.9,4.2,0.7,4.5,1.4
CR,Costa Rica,Latin America,33.1,0.1,8.9,0.3,0.2,3.9,0.4,0.1,0.2,4.4,0.6,0.7,1.8,9.0,0.4,4.3,1.7,1.2,13.6,0.5,0.8,0.3,3.9,3.0,1.1,3.2,1.8
GH,Ghana,Africa,19.1,0.1,5.2,0.7,0.7,2.5,0.4,0.1,0.2,3.5,2.7,1.3,2.5,7.4,0.7,12.7,1.9,0.2,21.8,0.5,0.3,0.7,1.9,2.2,0.6,7.9,2.1
SY,Syrian Arab Rep,Middle East,26.6,0.1,7.7,0.1,2.8,8.1,1.1,0.1,1.5,6.1,0.2,4.2,5.7,5.5,0.2,1.8,3.7,1.2,9.8,0.5,0.3,0.3,0.8,8.9,0.2,1.3,1.4
WD,World,World,7.0,0.4,12.9,2.0,4.4,7.4,4.8,0.5,0.5,4.5,1.0,1.9,16.1,4.1,1.6,3.7,7.4,3.8,28.6,1.1,3.1,1.2,3.9,11.0,2.0,4.2,1.0
)csv";
inline constexpr std::array<std::string_view, 1> kAnnexBF3Suspect = {"ID"};

}  // namespace sciprofile::fixture_data
