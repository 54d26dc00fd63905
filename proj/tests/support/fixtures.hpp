#pragma once

namespace testsupport {

// Seven sentences crafted so sentence 1 shares exactly two lexical types with
// sentence 4 (copper, marble) and exactly three with sentence 6 (window,
// garden, silver), with every other pair involving sentence 1 disjoint. Its
// level-1 link set is therefore {4,4,6,6,6} and its level-3 set {6,6,6}.
inline const char* kLinkSetFixture =
    "copper marble window garden silver\n"
    "pelican nebula\n"
    "walrus tundra\n"
    "copper marble quarry anchor\n"
    "comet basalt\n"
    "window garden silver lantern\n"
    "falcon meadow\n";

// Encyclopedia-style document: 16 unheaded opening sentences, a heading
// before sentence 17 (economy/government block with a currency shift at 22),
// and a heading before sentence 26 where the topic turns to history.
inline const char* kCountryFixture =
    "Valtara is a small republic spread over a volcanic archipelago.\n"
    "The republic comprises one large island and four lesser islets.\n"
    "Most residents live along the sheltered western coastline.\n"
    "The climate is warm and humid through most of the year.\n"
    "Monsoon rains arrive over the archipelago late in the spring.\n"
    "Dense forest covers the steep interior of the large island.\n"
    "Several short rivers drain the highlands toward the coast.\n"
    "The population passed one million at the last census.\n"
    "Nearly half of the population is under twenty years of age.\n"
    "The official language is Valtaran, and a coastal creole is widely spoken.\n"
    "Primary schooling is free and compulsory for six years.\n"
    "The capital and chief port is Sendari, on the western shore.\n"
    "A deepwater quay was added to the port in the nineteen eighties.\n"
    "Ferries connect the lesser islets with the capital daily.\n"
    "Paved roads ring the large island but few cross the interior.\n"
    "Air service reaches the archipelago through a single runway at Sendari.\n"
    "## Economy and Government\n"
    "Farming remains the main livelihood across Valtara.\n"
    "The chief export is copra, harvested mostly on the island of Senda.\n"
    "Tea is grown in the highlands, which also yield cedar timber.\n"
    "Maize, plantains, cassava, and sorghum are the staple crops.\n"
    "Local industries include the processing of copra, tea, palm oil, and dried fish.\n"
    "The monetary unit is the toma, pegged at forty tomas to the dollar.\n"
    "Under the 1979 charter, the president serves a six-year term, and assembly members serve four-year terms.\n"
    "The National Unity Party was long the only legal party.\n"
    "A revised charter allowing rival parties passed in 1990.\n"
    "## History\n"
    "The island of Senda was first charted in 1502 by a Genoese navigator.\n"
    "The archipelago was later ceded to a trading company.\n";

// Two four-sentence topic blocks with identical sentences inside each block.
// Hand trace: link-set medians come out [3,3,2,2,7,7,6,6], differences at
// sentences 2..8 are [0,1,0,5,0,1,0] with mean 1, so the only boundary is
// the seam at sentence 5.
inline const char* kTwoTopicFixture =
    "copper marble anchor\n"
    "copper marble anchor\n"
    "copper marble anchor\n"
    "copper marble anchor\n"
    "falcon meadow lantern\n"
    "falcon meadow lantern\n"
    "falcon meadow lantern\n"
    "falcon meadow lantern\n";

}  // namespace testsupport
