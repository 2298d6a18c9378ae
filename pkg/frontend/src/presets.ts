// generated by `posepilot fixtures --presets`; do not edit
export const PRESETS = {
  "canvas": {
    "width": 640,
    "height": 640
  },
  "presets": [
    {
      "command": "snapshot",
      "joints": [
        [
          320.0,
          150.0
        ],
        [
          320.0,
          200.0
        ],
        [
          280.0,
          200.0
        ],
        [
          255.0,
          265.0
        ],
        [
          300.0,
          140.0
        ],
        [
          360.0,
          200.0
        ],
        [
          340.0,
          140.0
        ],
        [
          385.0,
          265.0
        ],
        [
          290.0,
          360.0
        ],
        [
          290.0,
          480.0
        ],
        [
          290.0,
          600.0
        ],
        [
          350.0,
          360.0
        ],
        [
          350.0,
          480.0
        ],
        [
          350.0,
          600.0
        ],
        [
          310.0,
          140.0
        ],
        [
          330.0,
          140.0
        ],
        [
          300.0,
          150.0
        ],
        [
          340.0,
          150.0
        ]
      ]
    },
    {
      "command": "backward",
      "joints": [
        [
          320.0,
          150.0
        ],
        [
          320.0,
          200.0
        ],
        [
          280.0,
          200.0
        ],
        [
          275.0,
          270.0
        ],
        [
          270.0,
          340.0
        ],
        [
          360.0,
          200.0
        ],
        [
          340.0,
          140.0
        ],
        [
          385.0,
          265.0
        ],
        [
          290.0,
          360.0
        ],
        [
          290.0,
          480.0
        ],
        [
          290.0,
          600.0
        ],
        [
          350.0,
          360.0
        ],
        [
          350.0,
          480.0
        ],
        [
          350.0,
          600.0
        ],
        [
          310.0,
          140.0
        ],
        [
          330.0,
          140.0
        ],
        [
          300.0,
          150.0
        ],
        [
          340.0,
          150.0
        ]
      ]
    },
    {
      "command": "forward",
      "joints": [
        [
          320.0,
          150.0
        ],
        [
          320.0,
          200.0
        ],
        [
          280.0,
          200.0
        ],
        [
          255.0,
          265.0
        ],
        [
          300.0,
          140.0
        ],
        [
          360.0,
          200.0
        ],
        [
          370.0,
          340.0
        ],
        [
          365.0,
          270.0
        ],
        [
          290.0,
          360.0
        ],
        [
          290.0,
          480.0
        ],
        [
          290.0,
          600.0
        ],
        [
          350.0,
          360.0
        ],
        [
          350.0,
          480.0
        ],
        [
          350.0,
          600.0
        ],
        [
          310.0,
          140.0
        ],
        [
          330.0,
          140.0
        ],
        [
          300.0,
          150.0
        ],
        [
          340.0,
          150.0
        ]
      ]
    },
    {
      "command": "left",
      "joints": [
        [
          320.0,
          150.0
        ],
        [
          320.0,
          200.0
        ],
        [
          280.0,
          200.0
        ],
        [
          275.0,
          270.0
        ],
        [
          270.0,
          340.0
        ],
        [
          360.0,
          200.0
        ],
        [
          480.0,
          200.0
        ],
        [
          420.0,
          200.0
        ],
        [
          290.0,
          360.0
        ],
        [
          290.0,
          480.0
        ],
        [
          290.0,
          600.0
        ],
        [
          350.0,
          360.0
        ],
        [
          350.0,
          480.0
        ],
        [
          350.0,
          600.0
        ],
        [
          310.0,
          140.0
        ],
        [
          330.0,
          140.0
        ],
        [
          300.0,
          150.0
        ],
        [
          340.0,
          150.0
        ]
      ]
    },
    {
      "command": "right",
      "joints": [
        [
          320.0,
          150.0
        ],
        [
          320.0,
          200.0
        ],
        [
          280.0,
          200.0
        ],
        [
          220.0,
          200.0
        ],
        [
          160.0,
          200.0
        ],
        [
          360.0,
          200.0
        ],
        [
          370.0,
          340.0
        ],
        [
          365.0,
          270.0
        ],
        [
          290.0,
          360.0
        ],
        [
          290.0,
          480.0
        ],
        [
          290.0,
          600.0
        ],
        [
          350.0,
          360.0
        ],
        [
          350.0,
          480.0
        ],
        [
          350.0,
          600.0
        ],
        [
          310.0,
          140.0
        ],
        [
          330.0,
          140.0
        ],
        [
          300.0,
          150.0
        ],
        [
          340.0,
          150.0
        ]
      ]
    },
    {
      "command": "up",
      "joints": [
        [
          320.0,
          150.0
        ],
        [
          320.0,
          200.0
        ],
        [
          280.0,
          200.0
        ],
        [
          265.0,
          140.0
        ],
        [
          260.0,
          80.0
        ],
        [
          360.0,
          200.0
        ],
        [
          380.0,
          80.0
        ],
        [
          375.0,
          140.0
        ],
        [
          290.0,
          360.0
        ],
        [
          290.0,
          480.0
        ],
        [
          290.0,
          600.0
        ],
        [
          350.0,
          360.0
        ],
        [
          350.0,
          480.0
        ],
        [
          350.0,
          600.0
        ],
        [
          310.0,
          140.0
        ],
        [
          330.0,
          140.0
        ],
        [
          300.0,
          150.0
        ],
        [
          340.0,
          150.0
        ]
      ]
    },
    {
      "command": "down",
      "joints": [
        [
          320.0,
          150.0
        ],
        [
          320.0,
          200.0
        ],
        [
          280.0,
          200.0
        ],
        [
          250.0,
          250.0
        ],
        [
          220.0,
          300.0
        ],
        [
          360.0,
          200.0
        ],
        [
          420.0,
          300.0
        ],
        [
          390.0,
          250.0
        ],
        [
          290.0,
          360.0
        ],
        [
          290.0,
          480.0
        ],
        [
          290.0,
          600.0
        ],
        [
          350.0,
          360.0
        ],
        [
          350.0,
          480.0
        ],
        [
          350.0,
          600.0
        ],
        [
          310.0,
          140.0
        ],
        [
          330.0,
          140.0
        ],
        [
          300.0,
          150.0
        ],
        [
          340.0,
          150.0
        ]
      ]
    },
    {
      "command": "turn_cw",
      "joints": [
        [
          320.0,
          150.0
        ],
        [
          320.0,
          200.0
        ],
        [
          280.0,
          200.0
        ],
        [
          245.0,
          230.0
        ],
        [
          216.0,
          260.0
        ],
        [
          360.0,
          200.0
        ],
        [
          424.0,
          140.0
        ],
        [
          395.0,
          170.0
        ],
        [
          290.0,
          360.0
        ],
        [
          290.0,
          480.0
        ],
        [
          290.0,
          600.0
        ],
        [
          350.0,
          360.0
        ],
        [
          350.0,
          480.0
        ],
        [
          350.0,
          600.0
        ],
        [
          310.0,
          140.0
        ],
        [
          330.0,
          140.0
        ],
        [
          300.0,
          150.0
        ],
        [
          340.0,
          150.0
        ]
      ]
    },
    {
      "command": "turn_ccw",
      "joints": [
        [
          320.0,
          150.0
        ],
        [
          320.0,
          200.0
        ],
        [
          280.0,
          200.0
        ],
        [
          245.0,
          170.0
        ],
        [
          216.0,
          140.0
        ],
        [
          360.0,
          200.0
        ],
        [
          424.0,
          260.0
        ],
        [
          395.0,
          230.0
        ],
        [
          290.0,
          360.0
        ],
        [
          290.0,
          480.0
        ],
        [
          290.0,
          600.0
        ],
        [
          350.0,
          360.0
        ],
        [
          350.0,
          480.0
        ],
        [
          350.0,
          600.0
        ],
        [
          310.0,
          140.0
        ],
        [
          330.0,
          140.0
        ],
        [
          300.0,
          150.0
        ],
        [
          340.0,
          150.0
        ]
      ]
    },
    {
      "command": "wait",
      "joints": [
        [
          320.0,
          150.0
        ],
        [
          320.0,
          200.0
        ],
        [
          280.0,
          200.0
        ],
        [
          275.0,
          270.0
        ],
        [
          270.0,
          340.0
        ],
        [
          360.0,
          200.0
        ],
        [
          370.0,
          340.0
        ],
        [
          365.0,
          270.0
        ],
        [
          290.0,
          360.0
        ],
        [
          290.0,
          480.0
        ],
        [
          290.0,
          600.0
        ],
        [
          350.0,
          360.0
        ],
        [
          350.0,
          480.0
        ],
        [
          350.0,
          600.0
        ],
        [
          310.0,
          140.0
        ],
        [
          330.0,
          140.0
        ],
        [
          300.0,
          150.0
        ],
        [
          340.0,
          150.0
        ]
      ]
    }
  ]
} as const;
