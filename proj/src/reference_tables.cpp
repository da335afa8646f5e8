#include "fnclass/reference_tables.hpp"

namespace fnclass::reference
{

const std::vector<Table1Row>& table1()
{
  static const std::vector<Table1Row> rows{
      { { "0", "1" }, 1, 2 },
      { { "x1", "x2", "x1^0", "x2^0" }, 2, 4 },
      { { "x1*x2", "x1*x2^0", "x1^0*x2", "x1^0*x2^0", "x1 + x1*x2", "x2^0 + x1*x2", "x1^0 + x1*x2",
          "x1^0 + x1*x2^0" },
        6,
        8 },
      { { "x1 + x2", "x1 + x2^0" }, 8, 2 },
  };
  return rows;
}

const std::vector<Table3Row>& table3()
{
  static const std::vector<Table3Row> rows{
      { 1, 0, 2, 1, 1, 2, 1, 1, 2, 1, 2, "0" },
      { 2, 1, 6, 2, 3, 6, 2, 2, 6, 9, 6, "x1" },
      { 3, 3, 30, 3, 5, 24, 3, 6, 24, 3, 24, "x1*x2" },
      { 3, 3, 30, 4, 7, 6, 4, 8, 6, 10, 6, "x1 + x2" },
      { 4, 6, 24, 5, 11, 24, 5, 28, 24, 13, 24, "x1 + x1*x3 + x2*x3" },
      { 5, 7, 194, 6, 9, 64, 6, 21, 16, 2, 16, "x1*x2*x3" },
      { 5, 7, 194, 6, 9, 64, 7, 23, 48, 6, 48, "x1*x2^0*x3^0 + x1" },
      { 5, 7, 194, 7, 12, 48, 8, 30, 48, 7, 48, "x1*x2^0*x3^0 + x2*x3" },
      { 5, 7, 194, 8, 12, 8, 9, 36, 16, 12, 8, "x1*x2^0*x3 + x1*x2*x3^0 + x2*x3" },
      { 5, 7, 194, 9, 15, 26, 9, 36, 16, 5, 8, "x1^0*x2*x3 + x1*x2^0*x3^0" },
      { 5, 7, 194, 9, 15, 26, 10, 42, 16, 8, 16, "x1*x2^0*x3 + x1*x2*x3^0 + x1^0*x2*x3" },
      { 5, 7, 194, 9, 15, 26, 11, 48, 2, 11, 2, "x1 + x2 + x3" },
      { 5, 7, 194, 10, 13, 24, 12, 32, 24, 14, 24, "x1 + x2*x3" },
      { 5, 7, 194, 11, 13, 24, 13, 33, 24, 4, 24, "x1*x2^0*x3 + x1*x2*x3^0" },
  };
  return rows;
}

const Table3Averages& table3_averages()
{
  static const Table3Averages averages{ 6.2, 51.2, 10.6, 23.3, 26.0, 19.7, 18.3 };
  return averages;
}

const std::vector<Table4Row>& table4()
{
  static const std::vector<Table4Row> rows{
      { 1, 3, 2, 2, 2 },
      { 2, 6, 4, 4, 3 },
      { 3, 22, 13, 11, 5 },
      { 4, 402, 104, 74, 11 },
      { 5, 1228158, 1606, std::nullopt, 38 },
  };
  return rows;
}

const std::vector<Table5Row>& table5()
{
  static const std::vector<Table5Row> rows{
      { { 0, 0, 0, 0, 0 }, 2 },
      { { 1, 0, 0, 0, 0 }, 10 },
      { { 2, 1, 0, 0, 0 }, 100 },
      { { 3, 2, 1, 0, 0 }, 240 },
      { { 3, 3, 1, 0, 0 }, 1940 },
      { { 4, 5, 2, 1, 0 }, 1920 },
      { { 4, 4, 3, 1, 0 }, 2400 },
      { { 4, 5, 3, 1, 0 }, 8160 },
      { { 4, 4, 4, 1, 0 }, 120 },
      { { 4, 5, 4, 1, 0 }, 8400 },
      { { 4, 6, 4, 1, 0 }, 301970 },
      { { 5, 9, 7, 2, 1 }, 20480 },
      { { 5, 7, 5, 3, 1 }, 3840 },
      { { 5, 8, 5, 3, 1 }, 9600 },
      { { 5, 6, 6, 3, 1 }, 1920 },
      { { 5, 7, 6, 3, 1 }, 1920 },
      { { 5, 8, 6, 3, 1 }, 38400 },
      { { 5, 7, 7, 3, 1 }, 1920 },
      { { 5, 8, 7, 3, 1 }, 38400 },
      { { 5, 9, 7, 3, 1 }, 130560 },
      { { 5, 6, 6, 4, 1 }, 3000 },
      { { 5, 7, 7, 4, 1 }, 34720 },
      { { 5, 8, 7, 4, 1 }, 177120 },
      { { 5, 9, 7, 4, 1 }, 274560 },
      { { 5, 7, 8, 4, 1 }, 7680 },
      { { 5, 8, 8, 4, 1 }, 274560 },
      { { 5, 9, 8, 4, 1 }, 1847280 },
      { { 5, 9, 7, 5, 1 }, 81920 },
      { { 5, 8, 8, 5, 1 }, 600 },
      { { 5, 9, 8, 5, 1 }, 1013760 },
      { { 5, 10, 8, 5, 1 }, 38400 },
      { { 5, 7, 9, 5, 1 }, 1200 },
      { { 5, 8, 9, 5, 1 }, 449040 },
      { { 5, 9, 9, 5, 1 }, 4093200 },
      { { 5, 10, 9, 5, 1 }, 5443200 },
      { { 5, 8, 10, 5, 1 }, 13680 },
      { { 5, 9, 10, 5, 1 }, 5826160 },
      { { 5, 10, 10, 5, 1 }, 4274814914ull },
  };
  return rows;
}

const std::vector<Figure4Entry>& figure4()
{
  static const std::vector<Figure4Entry> entries{
      { "identity", std::nullopt, 256, 65536 },
      { "s", GroupName::S, 80, 3984 },
      { "lg", GroupName::LG, 20, 92 },
      { "a", GroupName::A, 10, 32 },
      { "axa1", GroupName::AxA1, 6, 18 },
      { "rag", GroupName::RAG, 3, 8 },
      { "g", GroupName::G, 22, 402 },
      { "ge", GroupName::GE, 14, 222 },
      { "lf", GroupName::LF, 32, 4096 },
      { "imp", std::nullopt, 13, 104 },
      { "sub", std::nullopt, 11, 74 },
      { "sep", std::nullopt, 5, 11 },
  };
  return entries;
}

const ExampleValues& example_values()
{
  static const ExampleValues values = [] {
    ExampleValues v;
    v.sub_f_members = { "0",     "1",       "x1",    "x2",      "x3",    "x2^0",         "x3^0",
                        "x2 + x3", "x1*x2", "x1*x2^0", "x1*x3", "x1*x3^0", "x1*x2 + x1*x3" };
    v.sub_g_members = { "0",      "1",     "x1",          "x2",           "x3",           "x1^0",
                        "x1*x2", "x1^0*x3", "x1 + x1^0*x3", "x1*x2 + x1^0", "x1*x2 + x1^0*x3" };
    v.sep_g_sets = { "{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{1,2,3}" };
    v.implementations_f = {
        { "1,2,3", { "(1,00)", "(123,1000)", "(123,1011)", "(123,1101)", "(123,1110)" } },
        { "2,1,3", { "(21,000)", "(213,0100)", "(213,0111)", "(21,100)", "(213,1101)", "(213,1110)" } },
    };
    v.implementations_g = {
        { "1,2,3", { "(13,000)", "(13,011)", "(12,100)", "(12,111)" } },
        { "2,1,3", { "(21,010)", "(213,0000)", "(213,0011)", "(213,1000)", "(213,1011)", "(21,111)" } },
    };
    return v;
  }();
  return values;
}

} // namespace fnclass::reference
