#include "crosscap/embedded_data.hpp"

#include <stdexcept>

namespace crosscap::surface {

namespace {

const std::string kCurvesG13 = R"json({
 "version": "1",
 "genus": 13,
 "curves": [
  {
   "name": "a1",
   "trace": [
    13,
    1
   ]
  },
  {
   "name": "a2",
   "trace": [
    13,
    2,
    1,
    3
   ]
  },
  {
   "name": "b1",
   "trace": [
    1,
    2
   ]
  },
  {
   "name": "b2",
   "trace": [
    3,
    4
   ]
  },
  {
   "name": "b3",
   "trace": [
    6,
    7
   ]
  },
  {
   "name": "b4",
   "trace": [
    7,
    8
   ]
  },
  {
   "name": "b5",
   "trace": [
    10,
    11
   ]
  },
  {
   "name": "b6",
   "trace": [
    11,
    12
   ]
  },
  {
   "name": "c1",
   "trace": [
    2,
    3
   ]
  },
  {
   "name": "c2",
   "trace": [
    4,
    5
   ]
  },
  {
   "name": "c3",
   "trace": [
    5,
    6
   ]
  },
  {
   "name": "c4",
   "trace": [
    8,
    9
   ]
  },
  {
   "name": "c5",
   "trace": [
    9,
    10
   ]
  },
  {
   "name": "e",
   "trace": [
    1,
    3
   ]
  },
  {
   "name": "f",
   "trace": [
    3,
    13
   ]
  },
  {
   "name": "gamma1",
   "trace": [
    13,
    2,
    1,
    3
   ]
  },
  {
   "name": "gamma2",
   "trace": [
    1,
    3,
    2,
    4
   ]
  },
  {
   "name": "gamma3",
   "trace": [
    2,
    4,
    3,
    5
   ]
  },
  {
   "name": "gamma4",
   "trace": [
    3,
    5,
    4,
    6
   ]
  },
  {
   "name": "gamma5",
   "trace": [
    4,
    6,
    5,
    7
   ]
  },
  {
   "name": "gamma6",
   "trace": [
    5,
    7,
    6,
    8
   ]
  },
  {
   "name": "gamma7",
   "trace": [
    6,
    8,
    7,
    9
   ]
  },
  {
   "name": "gamma8",
   "trace": [
    7,
    9,
    8,
    10
   ]
  },
  {
   "name": "gamma9",
   "trace": [
    8,
    10,
    9,
    11
   ]
  },
  {
   "name": "gamma10",
   "trace": [
    9,
    11,
    10,
    12
   ]
  },
  {
   "name": "gamma11",
   "trace": [
    10,
    12,
    11,
    13
   ]
  },
  {
   "name": "gamma12",
   "trace": [
    11,
    13,
    12,
    1
   ]
  },
  {
   "name": "gamma13",
   "trace": [
    12,
    1,
    13,
    2
   ]
  }
 ],
 "reflection": [
  [
   1,
   3
  ],
  [
   2,
   6
  ],
  [
   4,
   5
  ],
  [
   7,
   8
  ],
  [
   9,
   11
  ],
  [
   10,
   12
  ]
 ]
}
)json";

const std::string kCurvesG14 = R"json({
 "version": "1",
 "genus": 14,
 "curves": [
  {
   "name": "a1",
   "trace": [
    13,
    1
   ]
  },
  {
   "name": "a2",
   "trace": [
    13,
    2,
    1,
    3
   ]
  },
  {
   "name": "b1",
   "trace": [
    1,
    2
   ]
  },
  {
   "name": "b2",
   "trace": [
    3,
    4
   ]
  },
  {
   "name": "b3",
   "trace": [
    6,
    7
   ]
  },
  {
   "name": "b4",
   "trace": [
    7,
    8
   ]
  },
  {
   "name": "b5",
   "trace": [
    10,
    11
   ]
  },
  {
   "name": "b6",
   "trace": [
    11,
    12
   ]
  },
  {
   "name": "c1",
   "trace": [
    2,
    3
   ]
  },
  {
   "name": "c2",
   "trace": [
    4,
    5
   ]
  },
  {
   "name": "c3",
   "trace": [
    5,
    6
   ]
  },
  {
   "name": "c4",
   "trace": [
    8,
    9
   ]
  },
  {
   "name": "c5",
   "trace": [
    9,
    10
   ]
  },
  {
   "name": "d6",
   "trace": [
    10,
    12
   ]
  },
  {
   "name": "e",
   "trace": [
    1,
    14
   ]
  },
  {
   "name": "f",
   "trace": [
    13,
    14
   ]
  },
  {
   "name": "gamma1",
   "trace": [
    13,
    2,
    1,
    3
   ]
  },
  {
   "name": "gamma2",
   "trace": [
    1,
    3,
    2,
    4
   ]
  },
  {
   "name": "gamma3",
   "trace": [
    2,
    4,
    3,
    5
   ]
  },
  {
   "name": "gamma4",
   "trace": [
    3,
    5,
    4,
    6
   ]
  },
  {
   "name": "gamma5",
   "trace": [
    4,
    6,
    5,
    7
   ]
  },
  {
   "name": "gamma6",
   "trace": [
    5,
    7,
    6,
    8
   ]
  },
  {
   "name": "gamma7",
   "trace": [
    6,
    8,
    7,
    9
   ]
  },
  {
   "name": "gamma8",
   "trace": [
    7,
    9,
    8,
    10
   ]
  },
  {
   "name": "gamma9",
   "trace": [
    8,
    10,
    9,
    11
   ]
  },
  {
   "name": "gamma10",
   "trace": [
    9,
    11,
    10,
    12
   ]
  },
  {
   "name": "gamma11",
   "trace": [
    10,
    12,
    11,
    13
   ]
  },
  {
   "name": "gamma12",
   "trace": [
    11,
    13,
    12,
    1
   ]
  },
  {
   "name": "gamma13",
   "trace": [
    12,
    1,
    13,
    2
   ]
  },
  {
   "name": "gamma14",
   "trace": [
    13,
    2,
    1,
    3
   ]
  }
 ],
 "reflection": [
  [
   1,
   14
  ],
  [
   2,
   3
  ],
  [
   4,
   7
  ],
  [
   5,
   6
  ],
  [
   10,
   11
  ]
 ]
}
)json";

}  // namespace

const std::string& embedded_curve_document(unsigned genus) {
    if (genus == 13) return kCurvesG13;
    if (genus == 14) return kCurvesG14;
    throw std::invalid_argument("no embedded curve table for genus " + std::to_string(genus));
}

}  // namespace crosscap::surface
