#include "siegel/ring.hpp"

// Published identities among the generators, transcribed term by term.

namespace siegel {

const Relation& e8_relation() {
  static const Relation r{"E8 in weight 8",
                          "E8",
                          {
                              {"48860325/18184241", "E2^4"},
                              {"-107719950/18184241", "E2^2*E4"},
                              {"26257000/18184241", "E2*E6"},
                              {"387686/138811", "E4^2"},
                          }};
  return r;
}

const Relation& chi5a_square_relation() {
  static const Relation r{"chi5a^2 in weight 10",
                          "chi5a^2",
                          {
                              {"31513745731/416023384089600", "E10"},
                              {"-126433528597/311423218947072", "E2^5"},
                              {"11304517601/14285468759040", "E2^3*E4"},
                              {"-41742579637/1557116094735360", "E2^2*E6"},
                              {"-38947571/120147846816", "E2*E4^2"},
                              {"-1000259890201/9083177219289600", "E4*E6"},
                          }};
  return r;
}

const Relation& chi5b_square_relation() {
  static const Relation r{"chi5b^2 in weight 10",
                          "chi5b^2",
                          {
                              {"31513745731/416023384089600", "E10"},
                              {"266799861/1281577032704", "E2^5"},
                              {"-261925781/1587274306560", "E2^3*E4"},
                              {"-1914649869/6407885163520", "E2^2*E6"},
                              {"935053847/51903869824512", "E2*E4^2"},
                              {"551346719209/3406191457233600", "E4*E6"},
                          }};
  return r;
}

const Relation& chi5b_quintic_relation() {
  static const Relation r{"chi5b^2 via chi5a^2",
                          "chi5b^2",
                          {
                              {"5005/8149248", "E2^5"},
                              {"-15587/16298496", "E2^3*E4"},
                              {"-4433/16298496", "E2^2*E6"},
                              {"1859/5432832", "E2*E4^2"},
                              {"4433/16298496", "E4*E6"},
                              {"1/1", "chi5a^2"},
                          }};
  return r;
}

const Relation& chi15_square_relation() {
  static const Relation r{"chi15^2 in E2, E4, E6, chi5a (chi15 scaled by 3621888/4433)",
                          "chi15^2",
                          {
                              {"7193626131746618585/222607917767232721152", "E2^15"},
                              {"-307986483294442487/1426973831841235392", "E2^13*E4"},
                              {"1416328854305111/54400761917701056", "E2^12*E6"},
                              {"4087366592607641/6860451114621324", "E2^11*E4^2"},
                              {"-192607575137275/1394891331223104", "E2^10*E4*E6"},
                              {"50704311727294/69507316593", "E2^10*chi5a^2"},
                              {"-52003816542174887/59873027909422464", "E2^9*E4^3"},
                              {"2912260461769/319066052303232", "E2^9*E6^2"},
                              {"1922370985523/6706208323188", "E2^8*E4^2*E6"},
                              {"-20825649443174/5346716661", "E2^8*E4*chi5a^2"},
                              {"102989732952024139/146356290445254912", "E2^7*E4^4"},
                              {"-96923094941/2727060276096", "E2^7*E4*E6^2"},
                              {"27583081580/203833773", "E2^7*E6*chi5a^2"},
                              {"-92968372638167/321897999513024", "E2^6*E4^3*E6"},
                              {"65651791909/36815313727296", "E2^6*E6^3"},
                              {"3387092572918/411285897", "E2^6*E4^2*chi5a^2"},
                              {"-7304217732454747/24392715074209152", "E2^5*E4^5"},
                              {"30622846693/629321602176", "E2^5*E4^2*E6^2"},
                              {"-256204744/505791", "E2^5*E4*E6*chi5a^2"},
                              {"-10936889634816/19651489", "E2^5*chi5a^4"},
                              {"14944942065833/107299333171008", "E2^4*E4^4*E6"},
                              {"-27494911499/6135885621216", "E2^4*E4*E6^3"},
                              {"-1176607216174/137095299", "E2^4*E4^3*chi5a^2"},
                              {"10349644/597753", "E2^4*E6^2*chi5a^2"},
                              {"36987323269/710702030016", "E2^3*E4^6"},
                              {"-49717185583/1887964806528", "E2^3*E4^3*E6^2"},
                              {"1709446981/8862945897312", "E2^3*E6^4"},
                              {"773604236/1206117", "E2^3*E4^2*E6*chi5a^2"},
                              {"2503569715200/1511653", "E2^3*E4*chi5a^4"},
                              {"-26102557/1042085088", "E2^2*E4^5*E6"},
                              {"2820958987/943982403264", "E2^2*E4^2*E6^3"},
                              {"509138188/116281", "E2^2*E4^4*chi5a^2"},
                              {"-2420960/45981", "E2^2*E4*E6^2*chi5a^2"},
                              {"-31993344000/57629", "E2^2*E6*chi5a^4"},
                              {"18421/4583952", "E2*E4^4*E6^2"},
                              {"-159653813/681765069024", "E2*E4*E6^4"},
                              {"-843440/3069", "E2*E4^3*E6*chi5a^2"},
                              {"-136400/66417", "E2*E6^3*chi5a^2"},
                              {"-137631744000/116281", "E2*E4^2*chi5a^4"},
                              {"-4433/20627784", "E4^3*E6^3"},
                              {"39651821/4431472948656", "E6^5"},
                              {"-301621736/348843", "E4^5*chi5a^2"},
                              {"1100/27", "E4^2*E6^2*chi5a^2"},
                              {"3018240000/4433", "E4*E6*chi5a^4"},
                              {"40993977139200000/19651489", "chi5a^6"},
                          },
                          "13118072684544/19651489"};
  return r;
}

Rational chi15_relation_scale() { return make_rational(3621888, 4433); }

}  // namespace siegel
