#include "gmrc/catalog.hpp"

#include <json.hpp>
#include <optional>
#include <stdexcept>

namespace gmrc {

namespace {

const char* kCatalogJson = R"json({
  "codes": [
    {
      "name": "C1",
      "spec": "C2_18_CASE1",
      "fields": {"rY0": "011011000000011010", "rY1": "010010110100111101"},
      "kind": "TypeI-W1",
      "gamma": 36,
      "beta": 543,
      "spectrum": {"A12": 1086, "A14": 6336, "A16": 125073}
    },
    {
      "name": "C2",
      "spec": "C2_18_CASE1",
      "fields": {"rY0": "010100100011011101", "rY1": "111111111011100101"},
      "kind": "TypeII",
      "alpha": -2604,
      "spectrum": {"A12": 1794, "A14": 0, "A16": 228321}
    },
    {
      "name": "C3",
      "spec": "C2_18_CASE2",
      "fields": {"rY0": "100110001110000101", "rY1": "110011101100010010"},
      "kind": "TypeI-W1",
      "gamma": 0,
      "beta": 342,
      "spectrum": {"A12": 684, "A14": 8640, "A16": 116073}
    },
    {
      "name": "C4",
      "spec": "C2_18_CASE2",
      "fields": {"rY0": "101110110001100101", "rY1": "110100111110101001"},
      "kind": "TypeI-W1",
      "gamma": 18,
      "beta": 420,
      "spectrum": {"A12": 840, "A14": 7488, "A16": 121113}
    },
    {
      "name": "C5",
      "spec": "C2_18_CASE2",
      "fields": {"rY0": "000000011111101110", "rY1": "101100111000001001"},
      "kind": "TypeI-W1",
      "gamma": 36,
      "beta": 561,
      "spectrum": {"A12": 1122, "A14": 6336, "A16": 124641}
    },
    {
      "name": "C6",
      "spec": "C2_18_CASE2",
      "fields": {"rY0": "110010100100100111", "rY1": "111000110100101110"},
      "kind": "TypeII",
      "alpha": -2706,
      "spectrum": {"A12": 1692, "A14": 0, "A16": 229545}
    },
    {
      "name": "C7",
      "spec": "C2_18_CASE3",
      "fields": {"rY0": "000000110100001101", "rY1": "000001010101011010"},
      "kind": "TypeI-W1",
      "gamma": 0,
      "beta": 186,
      "spectrum": {"A12": 372, "A14": 8640, "A16": 119817}
    },
    {
      "name": "C8",
      "spec": "C2_18_CASE3",
      "fields": {"rY0": "010100101100100011", "rY1": "101011101000110001"},
      "kind": "TypeI-W1",
      "gamma": 18,
      "beta": 432,
      "spectrum": {"A12": 864, "A14": 7488, "A16": 120825}
    },
    {
      "name": "C9",
      "spec": "C2_18_CASE3",
      "fields": {"rY0": "111010111000100001", "rY1": "001111101000100100"},
      "kind": "TypeI-W1",
      "gamma": 36,
      "beta": 597,
      "spectrum": {"A12": 1194, "A14": 6336, "A16": 123777}
    },
    {
      "name": "C10",
      "spec": "C2_18_CASE3",
      "fields": {"rY0": "101110010000000000", "rY1": "101011010011010101"},
      "kind": "TypeII",
      "alpha": -2538,
      "spectrum": {"A12": 1860, "A14": 0, "A16": 227529}
    },
    {
      "name": "C11",
      "spec": "C2_18_CASE3",
      "fields": {"rY0": "100100111110000011", "rY1": "010111100110100011"},
      "kind": "TypeII",
      "alpha": -3066,
      "spectrum": {"A12": 1332, "A14": 0, "A16": 233865}
    },
    {
      "name": "C12",
      "spec": "D18_2_CASE1",
      "fields": {"rA": "010100011010000001", "rB": "011111100011111000"},
      "kind": "TypeI-W1",
      "gamma": 18,
      "beta": 237,
      "spectrum": {"A12": 474, "A14": 7488, "A16": 125505}
    },
    {
      "name": "C13",
      "spec": "D18_2_CASE1",
      "fields": {"rA": "110000001010000111", "rB": "100111010010111010"},
      "kind": "TypeI-W1",
      "gamma": 18,
      "beta": 387,
      "spectrum": {"A12": 774, "A14": 7488, "A16": 121905}
    },
    {
      "name": "C14",
      "spec": "D18_2_CASE1",
      "fields": {"rA": "100101110111110100", "rB": "010100000100110010"},
      "kind": "TypeI-W1",
      "gamma": 36,
      "beta": 417,
      "spectrum": {"A12": 834, "A14": 6336, "A16": 128097}
    },
    {
      "name": "C15",
      "spec": "D18_2_CASE1",
      "fields": {"rA": "111011110001001010", "rB": "011010110101000000"},
      "kind": "TypeI-W1",
      "gamma": 36,
      "beta": 564,
      "spectrum": {"A12": 1128, "A14": 6336, "A16": 124569}
    },
    {
      "name": "C16",
      "spec": "D18_2_CASE2",
      "fields": {
        "rA1": "000", "rA2": "110", "rA3": "010", "rA4": "011", "rA5": "101",
        "rA6": "001", "rA7": "011", "rA8": "101", "rA9": "110",
        "rB": "000011000100101111"
      },
      "kind": "TypeI-W1",
      "gamma": 9,
      "beta": 264,
      "spectrum": {"A12": 528, "A14": 8064, "A16": 121401}
    },
    {
      "name": "C17",
      "spec": "D18_2_CASE2",
      "fields": {
        "rA1": "010", "rA2": "010", "rA3": "000", "rA4": "001", "rA5": "010",
        "rA6": "100", "rA7": "010", "rA8": "010", "rA9": "011",
        "rB": "111111011011101110"
      },
      "kind": "TypeI-W1",
      "gamma": 27,
      "beta": 345,
      "spectrum": {"A12": 690, "A14": 6912, "A16": 126369}
    },
    {
      "name": "C18",
      "spec": "C63_2_CASE1",
      "fields": {"rA": "100010011110", "rB": "110001011000", "rC": "110100110001"},
      "kind": "TypeI-W1",
      "gamma": 36,
      "beta": 423,
      "spectrum": {"A12": 846, "A14": 6336, "A16": 127953}
    },
    {
      "name": "C19",
      "spec": "C63_2_CASE2",
      "fields": {
        "rA1": "111", "rA2": "010", "rA3": "011", "rA4": "100", "rA5": "110",
        "rA6": "011", "rA7": "001", "rA8": "101", "rA9": "111",
        "rA10": "10", "rA11": "01", "rA12": "01", "rA13": "11", "rA14": "00",
        "rA15": "01", "rA16": "00", "rA17": "00", "rA18": "00"
      },
      "kind": "TypeI-W1",
      "gamma": 18,
      "beta": 342,
      "spectrum": {"A12": 684, "A14": 7488, "A16": 122985}
    },
    {
      "name": "C20",
      "spec": "C63_2_CASE2",
      "fields": {
        "rA1": "000", "rA2": "000", "rA3": "001", "rA4": "100", "rA5": "000",
        "rA6": "010", "rA7": "001", "rA8": "010", "rA9": "000",
        "rA10": "11", "rA11": "11", "rA12": "10", "rA13": "01", "rA14": "00",
        "rA15": "10", "rA16": "00", "rA17": "11", "rA18": "10"
      },
      "kind": "TypeI-W1",
      "gamma": 36,
      "beta": 510,
      "spectrum": {"A12": 1020, "A14": 6336, "A16": 125865}
    }
  ],
  "example16": {
    "group": "D8",
    "k": 2,
    "coeffs": ["0000", "0000", "0000", "0110", "0110", "1111", "1111", "1111"],
    "tau": [
      "0000000101111111",
      "0000001010111111",
      "0100000011011111",
      "1000000011101111",
      "0001000011110111",
      "0010000011111011",
      "0000010011111101",
      "0000100011111110",
      "0111111100010000",
      "1011111100100000",
      "1101111100000100",
      "1110111100001000",
      "1111011100000001",
      "1111101100000010",
      "1111110101000000",
      "1111111010000000"
    ],
    "spectrum": [1, 0, 0, 0, 28, 0, 0, 0, 198, 0, 0, 0, 28, 0, 0, 0, 1]
  }
})json";

nlohmann::ordered_json parsed_catalog() {
    return nlohmann::ordered_json::parse(catalog_json_text());
}

}  // namespace

const std::string& catalog_json_text() {
    static const std::string text = kCatalogJson;
    return text;
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = [] {
        nlohmann::ordered_json doc = parsed_catalog();
        std::vector<CatalogEntry> out;
        for (const auto& row : doc.at("codes")) {
            CatalogEntry e;
            e.name = row.at("name").get<std::string>();
            e.spec = row.at("spec").get<std::string>();
            for (const auto& [key, value] : row.at("fields").items())
                e.fields.emplace_back(key, value.get<std::string>());
            e.expected.kind = kind_from_string(row.at("kind").get<std::string>());
            if (e.expected.kind == Kind72::TypeII) {
                e.expected.alpha = row.at("alpha").get<long long>();
            } else {
                e.expected.gamma = row.at("gamma").get<long long>();
                e.expected.beta = row.at("beta").get<long long>();
            }
            const auto& sp = row.at("spectrum");
            e.a12 = sp.at("A12").get<std::uint64_t>();
            e.a14 = sp.at("A14").get<std::uint64_t>();
            e.a16 = sp.at("A16").get<std::uint64_t>();
            out.push_back(std::move(e));
        }
        return out;
    }();
    return entries;
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
    for (const CatalogEntry& e : catalog_entries())
        if (e.name == name) return &e;
    return nullptr;
}

const Example16& example16() {
    static const Example16 ex = [] {
        nlohmann::ordered_json doc = parsed_catalog();
        const auto& spec = doc.at("example16");
        std::optional<FiniteGroup> g = group_from_name(spec.at("group").get<std::string>());
        if (!g) throw std::invalid_argument("catalog: bad group name");
        std::size_t k = spec.at("k").get<std::size_t>();
        Example16 out{gmr_zero(*g, k), BinaryMatrix(0, 0), {}};
        const auto& coeffs = spec.at("coeffs");
        for (std::size_t i = 0; i < g->order; ++i) {
            std::string rows = coeffs.at(i).get<std::string>();
            BinaryMatrix m(k, k);
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < k; ++c)
                    if (rows.at(r * k + c) == '1') m.set(r, c, 1);
            out.v.coeffs[i] = m;
        }
        std::string tau_text;
        for (const auto& row : spec.at("tau")) {
            tau_text += row.get<std::string>();
            tau_text += '\n';
        }
        out.tau = BinaryMatrix::from_text(tau_text);
        for (const auto& count : spec.at("spectrum"))
            out.spectrum.push_back(count.get<std::uint64_t>());
        return out;
    }();
    return ex;
}

}  // namespace gmrc
