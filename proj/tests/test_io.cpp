#include <gtest/gtest.h>

#include "parklot/enumeration.hpp"
#include "parklot/io.hpp"

using namespace parklot;
using namespace parklot::io;

TEST(IntegerList, AcceptedForms) {
  const std::vector<int> want{2, -1, 0, 1};
  EXPECT_EQ(parse_integer_list("2,-1,0,1"), want);
  EXPECT_EQ(parse_integer_list(" 2 -1 0 1 "), want);
  EXPECT_EQ(parse_integer_list("(2, -1, 0, 1)"), want);
  EXPECT_EQ(parse_integer_list("[2,-1,0,1]"), want);
  EXPECT_EQ(parse_integer_list("2,\xE2\x88\x92" "1,0,1"), want);
  EXPECT_TRUE(parse_integer_list("").empty());
}

TEST(IntegerList, Rejects) {
  EXPECT_THROW(parse_integer_list("1,a"), input_error);
  EXPECT_THROW(parse_integer_list("(1,2"), input_error);
  EXPECT_THROW(parse_integer_list("1.5"), input_error);
  EXPECT_THROW(parse_integer_list("12345678901"), input_error);
  EXPECT_THROW(parse_integer_list("-"), input_error);
}

TEST(ParseObject, Detection) {
  EXPECT_EQ(kind_of(parse_object("2,1,4,4,1")), Kind::pf);
  EXPECT_EQ(kind_of(parse_object("2,-1,0,1,-1,-1")), Kind::luk);
  EXPECT_EQ(kind_of(parse_object("0,0")), Kind::luk);
  EXPECT_EQ(kind_of(parse_object("EENENN")), Kind::dyck);
  EXPECT_EQ(kind_of(parse_object("UUDUDD")), Kind::dyck);
  EXPECT_EQ(kind_of(parse_object("2,1,2", Kind::pf)), Kind::pf);
  EXPECT_THROW(parse_object("0,0", Kind::pf), input_error);
  EXPECT_THROW(parse_object("1,1", Kind::luk), input_error);
  EXPECT_EQ(kind_of(parse_object(R"({"kind":"tree","children":[[],[[]]]})")), Kind::tree);
}

TEST(ParseObject, MalformedInput) {
  EXPECT_THROW(parse_object(""), input_error);
  EXPECT_THROW(parse_object("1,5,2"), input_error);   // entry above n
  EXPECT_THROW(parse_object("1,-2,1"), input_error);  // step below -1
  EXPECT_THROW(parse_object("-1,1"), input_error);    // negative prefix
  EXPECT_THROW(parse_object("ENNE"), input_error);
  EXPECT_THROW(parse_object("EXN"), input_error);
  EXPECT_THROW(parse_object("{bad json"), input_error);
  EXPECT_THROW(parse_object(R"({"prefs":[1]})"), input_error);
  EXPECT_THROW(parse_object(R"({"kind":"pf"})"), input_error);
  EXPECT_THROW(parse_object(R"({"kind":"pf","prefs":["a"]})"), input_error);
  EXPECT_THROW(parse_object(R"({"kind":"owl"})"), input_error);
  EXPECT_THROW(parse_object("1,2", Kind::tree), input_error);
}

TEST(Json, ExactForms) {
  EXPECT_EQ(to_json(ParkingPreference({2, 1, 4, 4, 1})).dump(), R"({"kind":"pf","prefs":[2,1,4,4,1]})");
  EXPECT_EQ(to_json(LukasiewiczWord({1, -1})).dump(), R"({"kind":"luk","steps":[1,-1]})");
  EXPECT_EQ(to_json(DyckPath::parse("EENN")).dump(), R"({"kind":"dyck","path":"EENN"})");
  EXPECT_EQ(to_json(encode_labelled(ParkingPreference({1, 1}))).dump(),
            R"({"kind":"labelled_luk","labels":[[1,2],null],"steps":[1,-1]})");
}

TEST(Json, RoundTripsEveryFamily) {
  for (Family f : all_families) {
    for (int n = 1; n <= 4; ++n) {
      generate(FamilySpec{f, n, {}}, [&](const Object& o) {
        const Parsed parsed = std::visit([](const auto& v) -> Parsed { return v; }, o);
        const std::string text = to_json(parsed).dump();
        const Parsed back = parse_object(text);
        EXPECT_EQ(to_json(back).dump(), text) << family_name(f);
        EXPECT_EQ(associated_word(o), std::visit([](const auto& v) -> LukasiewiczWord {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, LabelledLukasiewiczWord>) return v.word();
                    else return associated_word(Object(v));
                  }, back));
      });
    }
  }
}

TEST(Json, LabelledRoundTrip) {
  const ParkingPreference p({2, 1, 4, 4, 1});
  const auto lw = encode_labelled(p);
  const Parsed back = parse_object(to_json(lw).dump());
  EXPECT_EQ(decode_labelled(std::get<LabelledLukasiewiczWord>(back)), p);
  EXPECT_THROW(parse_object(R"({"kind":"labelled_luk","steps":[1,-1],"labels":[[1],null]})"), input_error);
}

TEST(Text, Forms) {
  EXPECT_EQ(to_text(parse_object("(2, 1, 4, 4, 1)")), "2,1,4,4,1");
  EXPECT_EQ(to_text(parse_object("UUDD")), "EENN");
  EXPECT_EQ(to_text(Parsed(word_to_tree(LukasiewiczWord({1, -1})))), "[[],[]]");
  EXPECT_EQ(to_text(Parsed(word_to_tree(LukasiewiczWord({0, 0})))), "[[[]]]");
  EXPECT_EQ(to_text(Parsed(encode_labelled(ParkingPreference({1, 1, 2})))), "1{1,2},0{3},-1");
}
