#include "qmf/configs.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qmf {

namespace {

// Hauptmodul eta quotients for the genus-zero levels; each has a simple
// pole at infinity and its zero at the cusp 0.
const char* kLevel1 = R"({
  "level": 1, "genus_hint": 0, "precision": 80,
  "generators": [ { "kind": "j744" } ]
})";

const char* kLevel2 = R"({
  "level": 2, "genus_hint": 0, "precision": 80,
  "generators": [ { "kind": "eta", "exponents": {"1": 24, "2": -24} } ]
})";

const char* kLevel3 = R"({
  "level": 3, "genus_hint": 0, "precision": 80,
  "generators": [ { "kind": "eta", "exponents": {"1": 12, "3": -12} } ]
})";

const char* kLevel4 = R"({
  "level": 4, "genus_hint": 0, "precision": 80,
  "generators": [ { "kind": "eta", "exponents": {"1": 8, "4": -8} } ]
})";

const char* kLevel5 = R"({
  "level": 5, "genus_hint": 0, "precision": 80,
  "generators": [ { "kind": "eta", "exponents": {"1": 6, "5": -6} } ]
})";

const char* kLevel6 = R"({
  "level": 6, "genus_hint": 0, "precision": 80,
  "generators": [ { "kind": "eta", "exponents": {"1": 5, "2": -1, "3": 1, "6": -5} } ]
})";

const char* kLevel7 = R"({
  "level": 7, "genus_hint": 0, "precision": 80,
  "generators": [ { "kind": "eta", "exponents": {"1": 4, "7": -4} } ]
})";

const char* kLevel8 = R"({
  "level": 8, "genus_hint": 0, "precision": 80,
  "generators": [ { "kind": "eta", "exponents": {"1": 4, "2": -2, "4": 2, "8": -4} } ]
})";

const char* kLevel9 = R"({
  "level": 9, "genus_hint": 0, "precision": 80,
  "generators": [ { "kind": "eta", "exponents": {"1": 3, "9": -3} } ]
})";

const char* kLevel10 = R"({
  "level": 10, "genus_hint": 0, "precision": 80,
  "generators": [ { "kind": "eta", "exponents": {"1": 3, "2": -1, "5": 1, "10": -3} } ]
})";

// X_0(11) is the elliptic curve y^2 + y = x^3 - x^2 - 10x - 20 with the
// cusp at infinity as origin; the seeds are the q-expansions of x and -y
// (poles of order 2 and 3), re-derivable from the level-11 newform.  The
// oracle test rebuilds them from scratch and compares.
const char* kLevel11 = R"({
  "level": 11, "genus_hint": 1, "precision": 100,
  "generators": [
    { "kind": "seed", "low": -2, "provenance": "x-coordinate of the degree-one map X_0(11) -> (y^2+y=x^3-x^2-10x-20); coefficients re-derived in-tree from the weight-2 newform",
      "seed_series": ["1", "2", "4", "5", "8", "1", "7", "-11", "10", "-12", "-18", "-22", "26", "-11", "41", "44", "-15", "25", "-66", "54", "-34", "-132", "-165", "178", "-55", "189", "222", "-48", "92", "-269", "274", "-112", "-572", "-767", "756", "-209", "720", "814", "-218", "303", "-930", "1006", "-262", "-2064", "-2792", "2690", "-693", "2366", "2626", "-660", "902", "-2831", "3222", "-674", "-6412", "-8742", "8230", "-2035", "6916", "7584", "-2000", "2419", "-7903", "9228", "-1484", "-18070", "-24704", "22996", "-5522", "18639", "20322", "-5251", "6234", "-20533", "24408", "-3380", "-47058", "-64420", "59296", "-13970", "46981", "50834", "-13318", "15029", "-50316", "60450", "-7162", "-115394", "-157870", "144342", "-33506", "112199", "120848", "-31416", "34873", "-117443", "142162", "-15258", "-268696", "-367399", "333808", "-76648", "255904", "274354", "-71636", "77556", "-262904", "319714", "-31184", "-599866", "-819205", "740898", "-168685", "561387", "599772", "-155991", "167040", "-567703", "692472", "-63352", "-1290450", "-1760160", "1585326", "-358523", "1190232", "1267444", "-329943", "348339", "-1187593", "1451356", "-125036", "-2689482"] },
    { "kind": "seed", "low": -3, "provenance": "-y-coordinate of the same map",
      "seed_series": ["1", "3", "7", "13", "17", "26", "19", "37", "-15", "-16", "-67", "-6", "-144", "92", "-66", "119", "95", "247", "285", "70", "-482", "-438", "114", "-1363", "700", "-451", "527", "390", "2134", "1844", "1233", "-3650", "-2543", "1630", "-7843", "3296", "-2343", "1820", "720", "12054", "9339", "8010", "-20165", "-11862", "10414", "-35564", "13116", "-10087", "5604", "136", "54686", "39698", "38577", "-89266", "-48446", "49732", "-137742", "45048", "-38104", "14468", "-7866", "212664", "148105", "153839", "-341358", "-175458", "197613", "-477940", "142344", "-129932", "34009", "-45466", "738725", "500402", "541483", "-1168212", "-580198", "692628", "-1520116", "416928", "-408705", "69623", "-188090", "2349414", "1559061", "1732580", "-3669636", "-1777174", "2206259", "-4511534", "1156693", "-1202190", "123949", "-648084", "6957176", "4546935", "5145949", "-10747946", "-5110983", "6520832", "-12632681", "3056954", "-3343197", "167252", "-2007473", "19417504", "12538702", "14372336", "-29707806", "-13927452", "18122806", "-33673419", "7764803", "-8858113", "80943", "-5729036", "51534147", "32961312", "38131183", "-78159888", "-36236901", "47842096", "-85995014", "19030374", "-22506121", "-533832", "-15378470", "130968871", "83111277", "96792957", "-197072630", "-90544120"] }
  ]
})";

const char* kLevel27 = R"({
  "level": 27, "genus_hint": 1, "precision": 100,
  "generators": [
    { "kind": "eta", "exponents": {"3": -1, "9": 4, "27": -3} },
    { "kind": "eta", "exponents": {"3": 3, "27": -3} }
  ]
})";

const char* kLevel31 = R"({
  "level": 31, "genus_hint": 2, "precision": 90,
  "generators": [
    { "kind": "trace",
      "orbit": [
        {"6": -1, "8": -1, "16": -1, "18": 1, "24": 1, "30": -1, "36": -1, "40": -1, "78": 1, "80": -1, "90": 1, "96": -1, "104": 1, "120": 1, "208": 1, "240": 1},
        {"12": -1, "16": -1, "32": -1, "36": 1, "48": 1, "60": -1, "72": -1, "80": -1, "156": 1, "160": -1, "180": 1, "192": -1, "208": 1, "240": 1, "416": 1, "480": 1},
        {"18": -1, "24": -1, "48": -1, "54": 1, "72": 1, "90": -1, "108": -1, "120": -1, "234": 1, "240": -1, "270": 1, "288": -1, "312": 1, "360": 1, "624": 1, "720": 1},
        {"24": -1, "32": -1, "64": -1, "72": 1, "96": 1, "120": -1, "144": -1, "160": -1, "312": 1, "320": -1, "360": 1, "384": -1, "416": 1, "480": 1, "832": 1, "960": 1},
        {"48": -1, "64": -1, "128": -1, "144": 1, "192": 1, "240": -1, "288": -1, "320": -1, "624": 1, "640": -1, "720": 1, "768": -1, "832": 1, "960": 1, "1664": 1, "1920": 1}
      ],
      "multipliers": [[0,1],[0,1],[1,2],[1,2],[0,1]] },
    { "kind": "trace",
      "orbit": [
        {"6": -1, "18": 1, "30": -1, "36": -1, "78": 1, "90": 1},
        {"12": -1, "36": 1, "60": -1, "72": -1, "156": 1, "180": 1},
        {"18": -1, "54": 1, "90": -1, "108": -1, "234": 1, "270": 1},
        {"24": -1, "72": 1, "120": -1, "144": -1, "312": 1, "360": 1},
        {"48": -1, "144": 1, "240": -1, "288": -1, "624": 1, "720": 1}
      ],
      "multipliers": [[1,2],[0,1],[1,2],[0,1],[0,1]] },
    { "kind": "trace",
      "orbit": [
        {"6": -1, "16": -1, "18": 1, "30": -1, "36": -1, "48": 1, "78": 1, "80": -1, "90": 1, "96": -1, "208": 1, "240": 1},
        {"12": -1, "32": -1, "36": 1, "60": -1, "72": -1, "96": 1, "156": 1, "160": -1, "180": 1, "192": -1, "416": 1, "480": 1},
        {"18": -1, "48": -1, "54": 1, "90": -1, "108": -1, "144": 1, "234": 1, "240": -1, "270": 1, "288": -1, "624": 1, "720": 1},
        {"24": -1, "64": -1, "72": 1, "120": -1, "144": -1, "192": 1, "312": 1, "320": -1, "360": 1, "384": -1, "832": 1, "960": 1},
        {"48": -1, "128": -1, "144": 1, "240": -1, "288": -1, "384": 1, "624": 1, "640": -1, "720": 1, "768": -1, "1664": 1, "1920": 1}
      ],
      "multipliers": [[0,1],[1,2],[1,2],[0,1],[0,1]] }
  ],
  "order_table": {
    "rows": ["f1", "f2", "f3", "f4", "f8"],
    "cols": ["1/31", "2/31", "3/31", "4/31", "8/31"],
    "orders": [
      [3, 0, -4, 2, -1],
      [0, 2, 3, -1, -4],
      [-4, 3, -1, 0, 2],
      [2, -1, 0, -4, 3],
      [-1, -4, 2, 3, 0]
    ]
  }
})";

const std::map<long, const char*>& registry() {
  static const std::map<long, const char*> reg = {
      {1, kLevel1},  {2, kLevel2},   {3, kLevel3},   {4, kLevel4},
      {5, kLevel5},  {6, kLevel6},   {7, kLevel7},   {8, kLevel8},
      {9, kLevel9},  {10, kLevel10}, {11, kLevel11}, {27, kLevel27},
      {31, kLevel31}};
  return reg;
}

}  // namespace

std::vector<long> shipped_levels() {
  std::vector<long> out;
  for (auto& [n, text] : registry()) {
    (void)text;
    out.push_back(n);
  }
  return out;
}

const std::string& shipped_level_config_text(long N) {
  static std::map<long, std::string> cache;
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  auto rit = registry().find(N);
  if (rit == registry().end())
    throw std::domain_error("no shipped config for level " + std::to_string(N));
  return cache.emplace(N, rit->second).first->second;
}

LevelConfig shipped_level_config(long N) {
  return parse_level_config(shipped_level_config_text(N));
}

LevelConfig load_level_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_level_config(ss.str());
}

}  // namespace qmf
