//! Correctly rounded sine, cosine and tangent of whole degrees 0..360,
//! computed with 256-bit arithmetic (mpmath) and stored as f64 bit patterns.

pub const TRIG_DEGREES: [(u64, u64, Option<u64>); 360] = [
    (0x0000000000000000, 0x3ff0000000000000, Some(0x0000000000000000)), // 0
    (0x3f91df0b2b89dd1e, 0x3feffec097f5af8a, Some(0x3f91dfbd9410a422)), // 1
    (0x3fa1de58c9f7dc27, 0x3feffb0278bf0567, Some(0x3fa1e12295d61fc2)), // 2
    (0x3faacbc748efc90e, 0x3feff4c5ed12e61d, Some(0x3faad53144273e72)), // 3
    (0x3fb1db8f6d6a5128, 0x3fefec0b7170fff6, Some(0x3fb1e6b93a693204)), // 4
    (0x3fb64fd6b8c28103, 0x3fefe0d3b41815a2, Some(0x3fb665a8349d55e1)), // 5
    (0x3fbac2609b3c576c, 0x3fefd31f94f867c6, Some(0x3fbae81c75231d97)), // 6
    (0x3fbf32d44c4f62d3, 0x3fefc2f025a23e8b, Some(0x3fbf6ecf19881d31)), // 7
    (0x3fc1d06c968d9e19, 0x3fefb046a930947a, Some(0x3fc1fd3df8664fe5)), // 8
    (0x3fc4060b67a85375, 0x3fef9b24942fe45c, Some(0x3fc445f0fbb1cf92)), // 9
    (0x3fc63a1a7e0b738a, 0x3fef838b8c811c17, Some(0x3fc691e1ebc5cbbc)), // 10
    (0x3fc86c6ddd76624f, 0x3fef697d6938b6c2, Some(0x3fc8e174375dceb6)), // 11
    (0x3fca9cd9ac4258f6, 0x3fef4cfc327a0080, Some(0x3fcb350dac76234c)), // 12
    (0x3fcccb3236cdc675, 0x3fef2e0a214e870f, Some(0x3fcd8d16c1491594)), // 13
    (0x3fcef74bf2e4b91d, 0x3fef0ca99f79ba25, Some(0x3fcfe9fae1181f54)), // 14
    (0x3fd0907dc1930690, 0x3feee8dd4748bf15, Some(0x3fd126145e9ecd56)), // 15
    (0x3fd1a40add328e29, 0x3feec2a7e35e7b80, Some(0x3fd25a0951873b22)), // 16
    (0x3fd2b637cf83d5c7, 0x3fee9a0c6e7bdb1f, Some(0x3fd391176b8feb5a)), // 17
    (0x3fd3c6ef372fe950, 0x3fee6f0e134454ff, Some(0x3fd4cb7bfb4961af)), // 18
    (0x3fd4d61bd000cddb, 0x3fee41b02bfeb4cb, Some(0x3fd60976af8c1613)), // 19
    (0x3fd5e3a8748a0bf5, 0x3fee11f642522d1c, Some(0x3fd74b49cf3902d4)), // 20
    (0x3fd6ef801fced33c, 0x3feddfe40effb805, Some(0x3fd8913a75259d06)), // 21
    (0x3fd7f98deee59681, 0x3fedab7d7997cb58, Some(0x3fd9db90d0ac0d40)), // 22
    (0x3fd901bd2298ffab, 0x3fed74c6982c666f, Some(0x3fdb2a986b66229f)), // 23
    (0x3fda07f921061ad1, 0x3fed3bc3aeff7f95, Some(0x3fdc7ea074a90a0d)), // 24
    (0x3fdb0c2d77379853, 0x3fed0079302dd767, Some(0x3fddd7fc13699ab1)), // 25
    (0x3fdc0e45dabe05c8, 0x3fecc2ebbb5638ca, Some(0x3fdf3702bf455cf4)), // 26
    (0x3fdd0e2e2b44de01, 0x3fec83201d3d2c6d, Some(0x3fe04e0850c1dd5c)), // 27
    (0x3fde0bd274245078, 0x3fec411b4f6d2708, Some(0x3fe103c37f7ebedc)), // 28
    (0x3fdf071eedefa0ec, 0x3febfce277d339c7, Some(0x3fe1bce655fbb9be)), // 29
    (0x3fe0000000000000, 0x3febb67ae8584caa, Some(0x3fe279a74590331c)), // 30
    (0x3fe07b3120fddf13, 0x3feb6dea1e76eade, Some(0x3fe33a400c85af9d)), // 31
    (0x3fe0f5193eacdd2a, 0x3feb2335c2cda945, Some(0x3fe3feee02d72515)), // 32
    (0x3fe16daed770771d, 0x3fead663a8ae2fdc, Some(0x3fe4c7f26ed1d60f)), // 33
    (0x3fe1e4e88411fd12, 0x3fea8779cda8eea5, Some(0x3fe59592e296c625)), // 34
    (0x3fe25abcf87c4978, 0x3fea367e59158747, Some(0x3fe66819a3a0bf7b)), // 35
    (0x3fe2cf2304755a5e, 0x3fe9e3779b97f4a8, Some(0x3fe73fd61d9df543)), // 36
    (0x3fe342119455beb6, 0x3fe98e6c0ea27a14, Some(0x3fe81d1d621eb710)), // 37
    (0x3fe3b37fb1bdc939, 0x3fe9376253f463d1, Some(0x3fe9004ab6d5cc92)), // 38
    (0x3fe4236484487abe, 0x3fe8de613515a328, Some(0x3fe9e9c0346ca837)), // 39
    (0x3fe491b7523c161d, 0x3fe8836fa2cf5039, Some(0x3fead9e7783fbf1e)), // 40
    (0x3fe4fe6f81384fd4, 0x3fe82694b4a11c37, Some(0x3febd1326bb88d11)), // 41
    (0x3fe5698496e20bd8, 0x3fe7c7d7a833bec2, Some(0x3fecd01c246e405f)), // 42
    (0x3fe5d2ee398c9c2b, 0x3fe7673fe0c86982, Some(0x3fedd729e0bf9cb6)), // 43
    (0x3fe63aa430e07310, 0x3fe704d4e6a54d39, Some(0x3feee6ec253d2463)), // 44
    (0x3fe6a09e667f3bcd, 0x3fe6a09e667f3bcd, Some(0x3ff0000000000000)), // 45
    (0x3fe704d4e6a54d39, 0x3fe63aa430e07310, Some(0x3ff091883bfbf42e)), // 46
    (0x3fe7673fe0c86982, 0x3fe5d2ee398c9c2b, Some(0x3ff1286c17acf49c)), // 47
    (0x3fe7c7d7a833bec2, 0x3fe5698496e20bd8, Some(0x3ff1c511a0db83e2)), // 48
    (0x3fe82694b4a11c37, 0x3fe4fe6f81384fd4, Some(0x3ff267e8b3f5da82)), // 49
    (0x3fe8836fa2cf5039, 0x3fe491b7523c161d, Some(0x3ff3116c3711527e)), // 50
    (0x3fe8de613515a328, 0x3fe4236484487abe, Some(0x3ff3c2238553dcef)), // 51
    (0x3fe9376253f463d1, 0x3fe3b37fb1bdc939, Some(0x3ff47aa413b0ee1e)), // 52
    (0x3fe98e6c0ea27a14, 0x3fe342119455beb6, Some(0x3ff53b9359d2f919)), // 53
    (0x3fe9e3779b97f4a8, 0x3fe2cf2304755a5e, Some(0x3ff605a90c73ab79)), // 54
    (0x3fea367e59158747, 0x3fe25abcf87c4978, Some(0x3ff6d9b1b96ce127)), // 55
    (0x3fea8779cda8eea5, 0x3fe1e4e88411fd12, Some(0x3ff7b891d9a169b3)), // 56
    (0x3fead663a8ae2fdc, 0x3fe16daed770771d, Some(0x3ff8a34971bd700e)), // 57
    (0x3feb2335c2cda945, 0x3fe0f5193eacdd2a, Some(0x3ff99af8610e4105)), // 58
    (0x3feb6dea1e76eade, 0x3fe07b3120fddf13, Some(0x3ffaa0e385c196aa)), // 59
    (0x3febb67ae8584caa, 0x3fe0000000000000, Some(0x3ffbb67ae8584caa)), // 60
    (0x3febfce277d339c7, 0x3fdf071eedefa0ec, Some(0x3ffcdd612dd501f5)), // 61
    (0x3fec411b4f6d2708, 0x3fde0bd274245078, Some(0x3ffe1774a2562593)), // 62
    (0x3fec83201d3d2c6d, 0x3fdd0e2e2b44de01, Some(0x3fff66da45fee3f1)), // 63
    (0x3fecc2ebbb5638ca, 0x3fdc0e45dabe05c8, Some(0x40006705b35391e7)), // 64
    (0x3fed0079302dd767, 0x3fdb0c2d77379853, Some(0x400127f33e8d12e5)), // 65
    (0x3fed3bc3aeff7f95, 0x3fda07f921061ad1, Some(0x4001f7e220cc4171)), // 66
    (0x3fed74c6982c666f, 0x3fd901bd2298ffab, Some(0x4002d8c9200b5685)), // 67
    (0x3fedab7d7997cb58, 0x3fd7f98deee59681, Some(0x4003ccfa561175d6)), // 68
    (0x3feddfe40effb805, 0x3fd6ef801fced33c, Some(0x4004d738ef803783)), // 69
    (0x3fee11f642522d1c, 0x3fd5e3a8748a0bf5, Some(0x4005fad570f872d8)), // 70
    (0x3fee41b02bfeb4cb, 0x3fd4d61bd000cddb, Some(0x40073bd2e9a270e0)), // 71
    (0x3fee6f0e134454ff, 0x3fd3c6ef372fe950, Some(0x40089f188bdcd7af)), // 72
    (0x3fee9a0c6e7bdb1f, 0x3fd2b637cf83d5c7, Some(0x400a2ab4c713671e)), // 73
    (0x3feec2a7e35e7b80, 0x3fd1a40add328e29, Some(0x400be6398b3f2869)), // 74
    (0x3feee8dd4748bf15, 0x3fd0907dc1930690, Some(0x400ddb3d742c2655)), // 75
    (0x3fef0ca99f79ba25, 0x3fcef74bf2e4b91d, Some(0x40100b0a2833d3c4)), // 76
    (0x3fef2e0a214e870f, 0x3fcccb3236cdc675, Some(0x4011536e695dda94)), // 77
    (0x3fef4cfc327a0080, 0x3fca9cd9ac4258f6, Some(0x4012d18a8e2ff28c)), // 78
    (0x3fef697d6938b6c2, 0x3fc86c6ddd76624f, Some(0x40149405f7cc644b)), // 79
    (0x3fef838b8c811c17, 0x3fc63a1a7e0b738a, Some(0x4016af648056a136)), // 80
    (0x3fef9b24942fe45c, 0x3fc4060b67a85375, Some(0x4019414813ba662b)), // 81
    (0x3fefb046a930947a, 0x3fc1d06c968d9e19, Some(0x401c76237b025ae8)), // 82
    (0x3fefc2f025a23e8b, 0x3fbf32d44c4f62d3, Some(0x402049e7c666e3fe)), // 83
    (0x3fefd31f94f867c6, 0x3fbac2609b3c576c, Some(0x4023075ac71a38c7)), // 84
    (0x3fefe0d3b41815a2, 0x3fb64fd6b8c28103, Some(0x4026dc2fd0bfdbe2)), // 85
    (0x3fefec0b7170fff6, 0x3fb1db8f6d6a5128, Some(0x402c99f0ed772d4c)), // 86
    (0x3feff4c5ed12e61d, 0x3faacbc748efc90e, Some(0x403314c55fbc4c66)), // 87
    (0x3feffb0278bf0567, 0x3fa1de58c9f7dc27, Some(0x403ca2e17ec2185c)), // 88
    (0x3feffec097f5af8a, 0x3f91df0b2b89dd1e, Some(0x404ca51d76749a70)), // 89
    (0x3ff0000000000000, 0x0000000000000000, None), // 90
    (0x3feffec097f5af8a, 0xbf91df0b2b89dd1e, Some(0xc04ca51d76749a70)), // 91
    (0x3feffb0278bf0567, 0xbfa1de58c9f7dc27, Some(0xc03ca2e17ec2185c)), // 92
    (0x3feff4c5ed12e61d, 0xbfaacbc748efc90e, Some(0xc03314c55fbc4c66)), // 93
    (0x3fefec0b7170fff6, 0xbfb1db8f6d6a5128, Some(0xc02c99f0ed772d4c)), // 94
    (0x3fefe0d3b41815a2, 0xbfb64fd6b8c28103, Some(0xc026dc2fd0bfdbe2)), // 95
    (0x3fefd31f94f867c6, 0xbfbac2609b3c576c, Some(0xc023075ac71a38c7)), // 96
    (0x3fefc2f025a23e8b, 0xbfbf32d44c4f62d3, Some(0xc02049e7c666e3fe)), // 97
    (0x3fefb046a930947a, 0xbfc1d06c968d9e19, Some(0xc01c76237b025ae8)), // 98
    (0x3fef9b24942fe45c, 0xbfc4060b67a85375, Some(0xc019414813ba662b)), // 99
    (0x3fef838b8c811c17, 0xbfc63a1a7e0b738a, Some(0xc016af648056a136)), // 100
    (0x3fef697d6938b6c2, 0xbfc86c6ddd76624f, Some(0xc0149405f7cc644b)), // 101
    (0x3fef4cfc327a0080, 0xbfca9cd9ac4258f6, Some(0xc012d18a8e2ff28c)), // 102
    (0x3fef2e0a214e870f, 0xbfcccb3236cdc675, Some(0xc011536e695dda94)), // 103
    (0x3fef0ca99f79ba25, 0xbfcef74bf2e4b91d, Some(0xc0100b0a2833d3c4)), // 104
    (0x3feee8dd4748bf15, 0xbfd0907dc1930690, Some(0xc00ddb3d742c2655)), // 105
    (0x3feec2a7e35e7b80, 0xbfd1a40add328e29, Some(0xc00be6398b3f2869)), // 106
    (0x3fee9a0c6e7bdb1f, 0xbfd2b637cf83d5c7, Some(0xc00a2ab4c713671e)), // 107
    (0x3fee6f0e134454ff, 0xbfd3c6ef372fe950, Some(0xc0089f188bdcd7af)), // 108
    (0x3fee41b02bfeb4cb, 0xbfd4d61bd000cddb, Some(0xc0073bd2e9a270e0)), // 109
    (0x3fee11f642522d1c, 0xbfd5e3a8748a0bf5, Some(0xc005fad570f872d8)), // 110
    (0x3feddfe40effb805, 0xbfd6ef801fced33c, Some(0xc004d738ef803783)), // 111
    (0x3fedab7d7997cb58, 0xbfd7f98deee59681, Some(0xc003ccfa561175d6)), // 112
    (0x3fed74c6982c666f, 0xbfd901bd2298ffab, Some(0xc002d8c9200b5685)), // 113
    (0x3fed3bc3aeff7f95, 0xbfda07f921061ad1, Some(0xc001f7e220cc4171)), // 114
    (0x3fed0079302dd767, 0xbfdb0c2d77379853, Some(0xc00127f33e8d12e5)), // 115
    (0x3fecc2ebbb5638ca, 0xbfdc0e45dabe05c8, Some(0xc0006705b35391e7)), // 116
    (0x3fec83201d3d2c6d, 0xbfdd0e2e2b44de01, Some(0xbfff66da45fee3f1)), // 117
    (0x3fec411b4f6d2708, 0xbfde0bd274245078, Some(0xbffe1774a2562593)), // 118
    (0x3febfce277d339c7, 0xbfdf071eedefa0ec, Some(0xbffcdd612dd501f5)), // 119
    (0x3febb67ae8584caa, 0xbfe0000000000000, Some(0xbffbb67ae8584caa)), // 120
    (0x3feb6dea1e76eade, 0xbfe07b3120fddf13, Some(0xbffaa0e385c196aa)), // 121
    (0x3feb2335c2cda945, 0xbfe0f5193eacdd2a, Some(0xbff99af8610e4105)), // 122
    (0x3fead663a8ae2fdc, 0xbfe16daed770771d, Some(0xbff8a34971bd700e)), // 123
    (0x3fea8779cda8eea5, 0xbfe1e4e88411fd12, Some(0xbff7b891d9a169b3)), // 124
    (0x3fea367e59158747, 0xbfe25abcf87c4978, Some(0xbff6d9b1b96ce127)), // 125
    (0x3fe9e3779b97f4a8, 0xbfe2cf2304755a5e, Some(0xbff605a90c73ab79)), // 126
    (0x3fe98e6c0ea27a14, 0xbfe342119455beb6, Some(0xbff53b9359d2f919)), // 127
    (0x3fe9376253f463d1, 0xbfe3b37fb1bdc939, Some(0xbff47aa413b0ee1e)), // 128
    (0x3fe8de613515a328, 0xbfe4236484487abe, Some(0xbff3c2238553dcef)), // 129
    (0x3fe8836fa2cf5039, 0xbfe491b7523c161d, Some(0xbff3116c3711527e)), // 130
    (0x3fe82694b4a11c37, 0xbfe4fe6f81384fd4, Some(0xbff267e8b3f5da82)), // 131
    (0x3fe7c7d7a833bec2, 0xbfe5698496e20bd8, Some(0xbff1c511a0db83e2)), // 132
    (0x3fe7673fe0c86982, 0xbfe5d2ee398c9c2b, Some(0xbff1286c17acf49c)), // 133
    (0x3fe704d4e6a54d39, 0xbfe63aa430e07310, Some(0xbff091883bfbf42e)), // 134
    (0x3fe6a09e667f3bcd, 0xbfe6a09e667f3bcd, Some(0xbff0000000000000)), // 135
    (0x3fe63aa430e07310, 0xbfe704d4e6a54d39, Some(0xbfeee6ec253d2463)), // 136
    (0x3fe5d2ee398c9c2b, 0xbfe7673fe0c86982, Some(0xbfedd729e0bf9cb6)), // 137
    (0x3fe5698496e20bd8, 0xbfe7c7d7a833bec2, Some(0xbfecd01c246e405f)), // 138
    (0x3fe4fe6f81384fd4, 0xbfe82694b4a11c37, Some(0xbfebd1326bb88d11)), // 139
    (0x3fe491b7523c161d, 0xbfe8836fa2cf5039, Some(0xbfead9e7783fbf1e)), // 140
    (0x3fe4236484487abe, 0xbfe8de613515a328, Some(0xbfe9e9c0346ca837)), // 141
    (0x3fe3b37fb1bdc939, 0xbfe9376253f463d1, Some(0xbfe9004ab6d5cc92)), // 142
    (0x3fe342119455beb6, 0xbfe98e6c0ea27a14, Some(0xbfe81d1d621eb710)), // 143
    (0x3fe2cf2304755a5e, 0xbfe9e3779b97f4a8, Some(0xbfe73fd61d9df543)), // 144
    (0x3fe25abcf87c4978, 0xbfea367e59158747, Some(0xbfe66819a3a0bf7b)), // 145
    (0x3fe1e4e88411fd12, 0xbfea8779cda8eea5, Some(0xbfe59592e296c625)), // 146
    (0x3fe16daed770771d, 0xbfead663a8ae2fdc, Some(0xbfe4c7f26ed1d60f)), // 147
    (0x3fe0f5193eacdd2a, 0xbfeb2335c2cda945, Some(0xbfe3feee02d72515)), // 148
    (0x3fe07b3120fddf13, 0xbfeb6dea1e76eade, Some(0xbfe33a400c85af9d)), // 149
    (0x3fe0000000000000, 0xbfebb67ae8584caa, Some(0xbfe279a74590331c)), // 150
    (0x3fdf071eedefa0ec, 0xbfebfce277d339c7, Some(0xbfe1bce655fbb9be)), // 151
    (0x3fde0bd274245078, 0xbfec411b4f6d2708, Some(0xbfe103c37f7ebedc)), // 152
    (0x3fdd0e2e2b44de01, 0xbfec83201d3d2c6d, Some(0xbfe04e0850c1dd5c)), // 153
    (0x3fdc0e45dabe05c8, 0xbfecc2ebbb5638ca, Some(0xbfdf3702bf455cf4)), // 154
    (0x3fdb0c2d77379853, 0xbfed0079302dd767, Some(0xbfddd7fc13699ab1)), // 155
    (0x3fda07f921061ad1, 0xbfed3bc3aeff7f95, Some(0xbfdc7ea074a90a0d)), // 156
    (0x3fd901bd2298ffab, 0xbfed74c6982c666f, Some(0xbfdb2a986b66229f)), // 157
    (0x3fd7f98deee59681, 0xbfedab7d7997cb58, Some(0xbfd9db90d0ac0d40)), // 158
    (0x3fd6ef801fced33c, 0xbfeddfe40effb805, Some(0xbfd8913a75259d06)), // 159
    (0x3fd5e3a8748a0bf5, 0xbfee11f642522d1c, Some(0xbfd74b49cf3902d4)), // 160
    (0x3fd4d61bd000cddb, 0xbfee41b02bfeb4cb, Some(0xbfd60976af8c1613)), // 161
    (0x3fd3c6ef372fe950, 0xbfee6f0e134454ff, Some(0xbfd4cb7bfb4961af)), // 162
    (0x3fd2b637cf83d5c7, 0xbfee9a0c6e7bdb1f, Some(0xbfd391176b8feb5a)), // 163
    (0x3fd1a40add328e29, 0xbfeec2a7e35e7b80, Some(0xbfd25a0951873b22)), // 164
    (0x3fd0907dc1930690, 0xbfeee8dd4748bf15, Some(0xbfd126145e9ecd56)), // 165
    (0x3fcef74bf2e4b91d, 0xbfef0ca99f79ba25, Some(0xbfcfe9fae1181f54)), // 166
    (0x3fcccb3236cdc675, 0xbfef2e0a214e870f, Some(0xbfcd8d16c1491594)), // 167
    (0x3fca9cd9ac4258f6, 0xbfef4cfc327a0080, Some(0xbfcb350dac76234c)), // 168
    (0x3fc86c6ddd76624f, 0xbfef697d6938b6c2, Some(0xbfc8e174375dceb6)), // 169
    (0x3fc63a1a7e0b738a, 0xbfef838b8c811c17, Some(0xbfc691e1ebc5cbbc)), // 170
    (0x3fc4060b67a85375, 0xbfef9b24942fe45c, Some(0xbfc445f0fbb1cf92)), // 171
    (0x3fc1d06c968d9e19, 0xbfefb046a930947a, Some(0xbfc1fd3df8664fe5)), // 172
    (0x3fbf32d44c4f62d3, 0xbfefc2f025a23e8b, Some(0xbfbf6ecf19881d31)), // 173
    (0x3fbac2609b3c576c, 0xbfefd31f94f867c6, Some(0xbfbae81c75231d97)), // 174
    (0x3fb64fd6b8c28103, 0xbfefe0d3b41815a2, Some(0xbfb665a8349d55e1)), // 175
    (0x3fb1db8f6d6a5128, 0xbfefec0b7170fff6, Some(0xbfb1e6b93a693204)), // 176
    (0x3faacbc748efc90e, 0xbfeff4c5ed12e61d, Some(0xbfaad53144273e72)), // 177
    (0x3fa1de58c9f7dc27, 0xbfeffb0278bf0567, Some(0xbfa1e12295d61fc2)), // 178
    (0x3f91df0b2b89dd1e, 0xbfeffec097f5af8a, Some(0xbf91dfbd9410a422)), // 179
    (0x0000000000000000, 0xbff0000000000000, Some(0x0000000000000000)), // 180
    (0xbf91df0b2b89dd1e, 0xbfeffec097f5af8a, Some(0x3f91dfbd9410a422)), // 181
    (0xbfa1de58c9f7dc27, 0xbfeffb0278bf0567, Some(0x3fa1e12295d61fc2)), // 182
    (0xbfaacbc748efc90e, 0xbfeff4c5ed12e61d, Some(0x3faad53144273e72)), // 183
    (0xbfb1db8f6d6a5128, 0xbfefec0b7170fff6, Some(0x3fb1e6b93a693204)), // 184
    (0xbfb64fd6b8c28103, 0xbfefe0d3b41815a2, Some(0x3fb665a8349d55e1)), // 185
    (0xbfbac2609b3c576c, 0xbfefd31f94f867c6, Some(0x3fbae81c75231d97)), // 186
    (0xbfbf32d44c4f62d3, 0xbfefc2f025a23e8b, Some(0x3fbf6ecf19881d31)), // 187
    (0xbfc1d06c968d9e19, 0xbfefb046a930947a, Some(0x3fc1fd3df8664fe5)), // 188
    (0xbfc4060b67a85375, 0xbfef9b24942fe45c, Some(0x3fc445f0fbb1cf92)), // 189
    (0xbfc63a1a7e0b738a, 0xbfef838b8c811c17, Some(0x3fc691e1ebc5cbbc)), // 190
    (0xbfc86c6ddd76624f, 0xbfef697d6938b6c2, Some(0x3fc8e174375dceb6)), // 191
    (0xbfca9cd9ac4258f6, 0xbfef4cfc327a0080, Some(0x3fcb350dac76234c)), // 192
    (0xbfcccb3236cdc675, 0xbfef2e0a214e870f, Some(0x3fcd8d16c1491594)), // 193
    (0xbfcef74bf2e4b91d, 0xbfef0ca99f79ba25, Some(0x3fcfe9fae1181f54)), // 194
    (0xbfd0907dc1930690, 0xbfeee8dd4748bf15, Some(0x3fd126145e9ecd56)), // 195
    (0xbfd1a40add328e29, 0xbfeec2a7e35e7b80, Some(0x3fd25a0951873b22)), // 196
    (0xbfd2b637cf83d5c7, 0xbfee9a0c6e7bdb1f, Some(0x3fd391176b8feb5a)), // 197
    (0xbfd3c6ef372fe950, 0xbfee6f0e134454ff, Some(0x3fd4cb7bfb4961af)), // 198
    (0xbfd4d61bd000cddb, 0xbfee41b02bfeb4cb, Some(0x3fd60976af8c1613)), // 199
    (0xbfd5e3a8748a0bf5, 0xbfee11f642522d1c, Some(0x3fd74b49cf3902d4)), // 200
    (0xbfd6ef801fced33c, 0xbfeddfe40effb805, Some(0x3fd8913a75259d06)), // 201
    (0xbfd7f98deee59681, 0xbfedab7d7997cb58, Some(0x3fd9db90d0ac0d40)), // 202
    (0xbfd901bd2298ffab, 0xbfed74c6982c666f, Some(0x3fdb2a986b66229f)), // 203
    (0xbfda07f921061ad1, 0xbfed3bc3aeff7f95, Some(0x3fdc7ea074a90a0d)), // 204
    (0xbfdb0c2d77379853, 0xbfed0079302dd767, Some(0x3fddd7fc13699ab1)), // 205
    (0xbfdc0e45dabe05c8, 0xbfecc2ebbb5638ca, Some(0x3fdf3702bf455cf4)), // 206
    (0xbfdd0e2e2b44de01, 0xbfec83201d3d2c6d, Some(0x3fe04e0850c1dd5c)), // 207
    (0xbfde0bd274245078, 0xbfec411b4f6d2708, Some(0x3fe103c37f7ebedc)), // 208
    (0xbfdf071eedefa0ec, 0xbfebfce277d339c7, Some(0x3fe1bce655fbb9be)), // 209
    (0xbfe0000000000000, 0xbfebb67ae8584caa, Some(0x3fe279a74590331c)), // 210
    (0xbfe07b3120fddf13, 0xbfeb6dea1e76eade, Some(0x3fe33a400c85af9d)), // 211
    (0xbfe0f5193eacdd2a, 0xbfeb2335c2cda945, Some(0x3fe3feee02d72515)), // 212
    (0xbfe16daed770771d, 0xbfead663a8ae2fdc, Some(0x3fe4c7f26ed1d60f)), // 213
    (0xbfe1e4e88411fd12, 0xbfea8779cda8eea5, Some(0x3fe59592e296c625)), // 214
    (0xbfe25abcf87c4978, 0xbfea367e59158747, Some(0x3fe66819a3a0bf7b)), // 215
    (0xbfe2cf2304755a5e, 0xbfe9e3779b97f4a8, Some(0x3fe73fd61d9df543)), // 216
    (0xbfe342119455beb6, 0xbfe98e6c0ea27a14, Some(0x3fe81d1d621eb710)), // 217
    (0xbfe3b37fb1bdc939, 0xbfe9376253f463d1, Some(0x3fe9004ab6d5cc92)), // 218
    (0xbfe4236484487abe, 0xbfe8de613515a328, Some(0x3fe9e9c0346ca837)), // 219
    (0xbfe491b7523c161d, 0xbfe8836fa2cf5039, Some(0x3fead9e7783fbf1e)), // 220
    (0xbfe4fe6f81384fd4, 0xbfe82694b4a11c37, Some(0x3febd1326bb88d11)), // 221
    (0xbfe5698496e20bd8, 0xbfe7c7d7a833bec2, Some(0x3fecd01c246e405f)), // 222
    (0xbfe5d2ee398c9c2b, 0xbfe7673fe0c86982, Some(0x3fedd729e0bf9cb6)), // 223
    (0xbfe63aa430e07310, 0xbfe704d4e6a54d39, Some(0x3feee6ec253d2463)), // 224
    (0xbfe6a09e667f3bcd, 0xbfe6a09e667f3bcd, Some(0x3ff0000000000000)), // 225
    (0xbfe704d4e6a54d39, 0xbfe63aa430e07310, Some(0x3ff091883bfbf42e)), // 226
    (0xbfe7673fe0c86982, 0xbfe5d2ee398c9c2b, Some(0x3ff1286c17acf49c)), // 227
    (0xbfe7c7d7a833bec2, 0xbfe5698496e20bd8, Some(0x3ff1c511a0db83e2)), // 228
    (0xbfe82694b4a11c37, 0xbfe4fe6f81384fd4, Some(0x3ff267e8b3f5da82)), // 229
    (0xbfe8836fa2cf5039, 0xbfe491b7523c161d, Some(0x3ff3116c3711527e)), // 230
    (0xbfe8de613515a328, 0xbfe4236484487abe, Some(0x3ff3c2238553dcef)), // 231
    (0xbfe9376253f463d1, 0xbfe3b37fb1bdc939, Some(0x3ff47aa413b0ee1e)), // 232
    (0xbfe98e6c0ea27a14, 0xbfe342119455beb6, Some(0x3ff53b9359d2f919)), // 233
    (0xbfe9e3779b97f4a8, 0xbfe2cf2304755a5e, Some(0x3ff605a90c73ab79)), // 234
    (0xbfea367e59158747, 0xbfe25abcf87c4978, Some(0x3ff6d9b1b96ce127)), // 235
    (0xbfea8779cda8eea5, 0xbfe1e4e88411fd12, Some(0x3ff7b891d9a169b3)), // 236
    (0xbfead663a8ae2fdc, 0xbfe16daed770771d, Some(0x3ff8a34971bd700e)), // 237
    (0xbfeb2335c2cda945, 0xbfe0f5193eacdd2a, Some(0x3ff99af8610e4105)), // 238
    (0xbfeb6dea1e76eade, 0xbfe07b3120fddf13, Some(0x3ffaa0e385c196aa)), // 239
    (0xbfebb67ae8584caa, 0xbfe0000000000000, Some(0x3ffbb67ae8584caa)), // 240
    (0xbfebfce277d339c7, 0xbfdf071eedefa0ec, Some(0x3ffcdd612dd501f5)), // 241
    (0xbfec411b4f6d2708, 0xbfde0bd274245078, Some(0x3ffe1774a2562593)), // 242
    (0xbfec83201d3d2c6d, 0xbfdd0e2e2b44de01, Some(0x3fff66da45fee3f1)), // 243
    (0xbfecc2ebbb5638ca, 0xbfdc0e45dabe05c8, Some(0x40006705b35391e7)), // 244
    (0xbfed0079302dd767, 0xbfdb0c2d77379853, Some(0x400127f33e8d12e5)), // 245
    (0xbfed3bc3aeff7f95, 0xbfda07f921061ad1, Some(0x4001f7e220cc4171)), // 246
    (0xbfed74c6982c666f, 0xbfd901bd2298ffab, Some(0x4002d8c9200b5685)), // 247
    (0xbfedab7d7997cb58, 0xbfd7f98deee59681, Some(0x4003ccfa561175d6)), // 248
    (0xbfeddfe40effb805, 0xbfd6ef801fced33c, Some(0x4004d738ef803783)), // 249
    (0xbfee11f642522d1c, 0xbfd5e3a8748a0bf5, Some(0x4005fad570f872d8)), // 250
    (0xbfee41b02bfeb4cb, 0xbfd4d61bd000cddb, Some(0x40073bd2e9a270e0)), // 251
    (0xbfee6f0e134454ff, 0xbfd3c6ef372fe950, Some(0x40089f188bdcd7af)), // 252
    (0xbfee9a0c6e7bdb1f, 0xbfd2b637cf83d5c7, Some(0x400a2ab4c713671e)), // 253
    (0xbfeec2a7e35e7b80, 0xbfd1a40add328e29, Some(0x400be6398b3f2869)), // 254
    (0xbfeee8dd4748bf15, 0xbfd0907dc1930690, Some(0x400ddb3d742c2655)), // 255
    (0xbfef0ca99f79ba25, 0xbfcef74bf2e4b91d, Some(0x40100b0a2833d3c4)), // 256
    (0xbfef2e0a214e870f, 0xbfcccb3236cdc675, Some(0x4011536e695dda94)), // 257
    (0xbfef4cfc327a0080, 0xbfca9cd9ac4258f6, Some(0x4012d18a8e2ff28c)), // 258
    (0xbfef697d6938b6c2, 0xbfc86c6ddd76624f, Some(0x40149405f7cc644b)), // 259
    (0xbfef838b8c811c17, 0xbfc63a1a7e0b738a, Some(0x4016af648056a136)), // 260
    (0xbfef9b24942fe45c, 0xbfc4060b67a85375, Some(0x4019414813ba662b)), // 261
    (0xbfefb046a930947a, 0xbfc1d06c968d9e19, Some(0x401c76237b025ae8)), // 262
    (0xbfefc2f025a23e8b, 0xbfbf32d44c4f62d3, Some(0x402049e7c666e3fe)), // 263
    (0xbfefd31f94f867c6, 0xbfbac2609b3c576c, Some(0x4023075ac71a38c7)), // 264
    (0xbfefe0d3b41815a2, 0xbfb64fd6b8c28103, Some(0x4026dc2fd0bfdbe2)), // 265
    (0xbfefec0b7170fff6, 0xbfb1db8f6d6a5128, Some(0x402c99f0ed772d4c)), // 266
    (0xbfeff4c5ed12e61d, 0xbfaacbc748efc90e, Some(0x403314c55fbc4c66)), // 267
    (0xbfeffb0278bf0567, 0xbfa1de58c9f7dc27, Some(0x403ca2e17ec2185c)), // 268
    (0xbfeffec097f5af8a, 0xbf91df0b2b89dd1e, Some(0x404ca51d76749a70)), // 269
    (0xbff0000000000000, 0x0000000000000000, None), // 270
    (0xbfeffec097f5af8a, 0x3f91df0b2b89dd1e, Some(0xc04ca51d76749a70)), // 271
    (0xbfeffb0278bf0567, 0x3fa1de58c9f7dc27, Some(0xc03ca2e17ec2185c)), // 272
    (0xbfeff4c5ed12e61d, 0x3faacbc748efc90e, Some(0xc03314c55fbc4c66)), // 273
    (0xbfefec0b7170fff6, 0x3fb1db8f6d6a5128, Some(0xc02c99f0ed772d4c)), // 274
    (0xbfefe0d3b41815a2, 0x3fb64fd6b8c28103, Some(0xc026dc2fd0bfdbe2)), // 275
    (0xbfefd31f94f867c6, 0x3fbac2609b3c576c, Some(0xc023075ac71a38c7)), // 276
    (0xbfefc2f025a23e8b, 0x3fbf32d44c4f62d3, Some(0xc02049e7c666e3fe)), // 277
    (0xbfefb046a930947a, 0x3fc1d06c968d9e19, Some(0xc01c76237b025ae8)), // 278
    (0xbfef9b24942fe45c, 0x3fc4060b67a85375, Some(0xc019414813ba662b)), // 279
    (0xbfef838b8c811c17, 0x3fc63a1a7e0b738a, Some(0xc016af648056a136)), // 280
    (0xbfef697d6938b6c2, 0x3fc86c6ddd76624f, Some(0xc0149405f7cc644b)), // 281
    (0xbfef4cfc327a0080, 0x3fca9cd9ac4258f6, Some(0xc012d18a8e2ff28c)), // 282
    (0xbfef2e0a214e870f, 0x3fcccb3236cdc675, Some(0xc011536e695dda94)), // 283
    (0xbfef0ca99f79ba25, 0x3fcef74bf2e4b91d, Some(0xc0100b0a2833d3c4)), // 284
    (0xbfeee8dd4748bf15, 0x3fd0907dc1930690, Some(0xc00ddb3d742c2655)), // 285
    (0xbfeec2a7e35e7b80, 0x3fd1a40add328e29, Some(0xc00be6398b3f2869)), // 286
    (0xbfee9a0c6e7bdb1f, 0x3fd2b637cf83d5c7, Some(0xc00a2ab4c713671e)), // 287
    (0xbfee6f0e134454ff, 0x3fd3c6ef372fe950, Some(0xc0089f188bdcd7af)), // 288
    (0xbfee41b02bfeb4cb, 0x3fd4d61bd000cddb, Some(0xc0073bd2e9a270e0)), // 289
    (0xbfee11f642522d1c, 0x3fd5e3a8748a0bf5, Some(0xc005fad570f872d8)), // 290
    (0xbfeddfe40effb805, 0x3fd6ef801fced33c, Some(0xc004d738ef803783)), // 291
    (0xbfedab7d7997cb58, 0x3fd7f98deee59681, Some(0xc003ccfa561175d6)), // 292
    (0xbfed74c6982c666f, 0x3fd901bd2298ffab, Some(0xc002d8c9200b5685)), // 293
    (0xbfed3bc3aeff7f95, 0x3fda07f921061ad1, Some(0xc001f7e220cc4171)), // 294
    (0xbfed0079302dd767, 0x3fdb0c2d77379853, Some(0xc00127f33e8d12e5)), // 295
    (0xbfecc2ebbb5638ca, 0x3fdc0e45dabe05c8, Some(0xc0006705b35391e7)), // 296
    (0xbfec83201d3d2c6d, 0x3fdd0e2e2b44de01, Some(0xbfff66da45fee3f1)), // 297
    (0xbfec411b4f6d2708, 0x3fde0bd274245078, Some(0xbffe1774a2562593)), // 298
    (0xbfebfce277d339c7, 0x3fdf071eedefa0ec, Some(0xbffcdd612dd501f5)), // 299
    (0xbfebb67ae8584caa, 0x3fe0000000000000, Some(0xbffbb67ae8584caa)), // 300
    (0xbfeb6dea1e76eade, 0x3fe07b3120fddf13, Some(0xbffaa0e385c196aa)), // 301
    (0xbfeb2335c2cda945, 0x3fe0f5193eacdd2a, Some(0xbff99af8610e4105)), // 302
    (0xbfead663a8ae2fdc, 0x3fe16daed770771d, Some(0xbff8a34971bd700e)), // 303
    (0xbfea8779cda8eea5, 0x3fe1e4e88411fd12, Some(0xbff7b891d9a169b3)), // 304
    (0xbfea367e59158747, 0x3fe25abcf87c4978, Some(0xbff6d9b1b96ce127)), // 305
    (0xbfe9e3779b97f4a8, 0x3fe2cf2304755a5e, Some(0xbff605a90c73ab79)), // 306
    (0xbfe98e6c0ea27a14, 0x3fe342119455beb6, Some(0xbff53b9359d2f919)), // 307
    (0xbfe9376253f463d1, 0x3fe3b37fb1bdc939, Some(0xbff47aa413b0ee1e)), // 308
    (0xbfe8de613515a328, 0x3fe4236484487abe, Some(0xbff3c2238553dcef)), // 309
    (0xbfe8836fa2cf5039, 0x3fe491b7523c161d, Some(0xbff3116c3711527e)), // 310
    (0xbfe82694b4a11c37, 0x3fe4fe6f81384fd4, Some(0xbff267e8b3f5da82)), // 311
    (0xbfe7c7d7a833bec2, 0x3fe5698496e20bd8, Some(0xbff1c511a0db83e2)), // 312
    (0xbfe7673fe0c86982, 0x3fe5d2ee398c9c2b, Some(0xbff1286c17acf49c)), // 313
    (0xbfe704d4e6a54d39, 0x3fe63aa430e07310, Some(0xbff091883bfbf42e)), // 314
    (0xbfe6a09e667f3bcd, 0x3fe6a09e667f3bcd, Some(0xbff0000000000000)), // 315
    (0xbfe63aa430e07310, 0x3fe704d4e6a54d39, Some(0xbfeee6ec253d2463)), // 316
    (0xbfe5d2ee398c9c2b, 0x3fe7673fe0c86982, Some(0xbfedd729e0bf9cb6)), // 317
    (0xbfe5698496e20bd8, 0x3fe7c7d7a833bec2, Some(0xbfecd01c246e405f)), // 318
    (0xbfe4fe6f81384fd4, 0x3fe82694b4a11c37, Some(0xbfebd1326bb88d11)), // 319
    (0xbfe491b7523c161d, 0x3fe8836fa2cf5039, Some(0xbfead9e7783fbf1e)), // 320
    (0xbfe4236484487abe, 0x3fe8de613515a328, Some(0xbfe9e9c0346ca837)), // 321
    (0xbfe3b37fb1bdc939, 0x3fe9376253f463d1, Some(0xbfe9004ab6d5cc92)), // 322
    (0xbfe342119455beb6, 0x3fe98e6c0ea27a14, Some(0xbfe81d1d621eb710)), // 323
    (0xbfe2cf2304755a5e, 0x3fe9e3779b97f4a8, Some(0xbfe73fd61d9df543)), // 324
    (0xbfe25abcf87c4978, 0x3fea367e59158747, Some(0xbfe66819a3a0bf7b)), // 325
    (0xbfe1e4e88411fd12, 0x3fea8779cda8eea5, Some(0xbfe59592e296c625)), // 326
    (0xbfe16daed770771d, 0x3fead663a8ae2fdc, Some(0xbfe4c7f26ed1d60f)), // 327
    (0xbfe0f5193eacdd2a, 0x3feb2335c2cda945, Some(0xbfe3feee02d72515)), // 328
    (0xbfe07b3120fddf13, 0x3feb6dea1e76eade, Some(0xbfe33a400c85af9d)), // 329
    (0xbfe0000000000000, 0x3febb67ae8584caa, Some(0xbfe279a74590331c)), // 330
    (0xbfdf071eedefa0ec, 0x3febfce277d339c7, Some(0xbfe1bce655fbb9be)), // 331
    (0xbfde0bd274245078, 0x3fec411b4f6d2708, Some(0xbfe103c37f7ebedc)), // 332
    (0xbfdd0e2e2b44de01, 0x3fec83201d3d2c6d, Some(0xbfe04e0850c1dd5c)), // 333
    (0xbfdc0e45dabe05c8, 0x3fecc2ebbb5638ca, Some(0xbfdf3702bf455cf4)), // 334
    (0xbfdb0c2d77379853, 0x3fed0079302dd767, Some(0xbfddd7fc13699ab1)), // 335
    (0xbfda07f921061ad1, 0x3fed3bc3aeff7f95, Some(0xbfdc7ea074a90a0d)), // 336
    (0xbfd901bd2298ffab, 0x3fed74c6982c666f, Some(0xbfdb2a986b66229f)), // 337
    (0xbfd7f98deee59681, 0x3fedab7d7997cb58, Some(0xbfd9db90d0ac0d40)), // 338
    (0xbfd6ef801fced33c, 0x3feddfe40effb805, Some(0xbfd8913a75259d06)), // 339
    (0xbfd5e3a8748a0bf5, 0x3fee11f642522d1c, Some(0xbfd74b49cf3902d4)), // 340
    (0xbfd4d61bd000cddb, 0x3fee41b02bfeb4cb, Some(0xbfd60976af8c1613)), // 341
    (0xbfd3c6ef372fe950, 0x3fee6f0e134454ff, Some(0xbfd4cb7bfb4961af)), // 342
    (0xbfd2b637cf83d5c7, 0x3fee9a0c6e7bdb1f, Some(0xbfd391176b8feb5a)), // 343
    (0xbfd1a40add328e29, 0x3feec2a7e35e7b80, Some(0xbfd25a0951873b22)), // 344
    (0xbfd0907dc1930690, 0x3feee8dd4748bf15, Some(0xbfd126145e9ecd56)), // 345
    (0xbfcef74bf2e4b91d, 0x3fef0ca99f79ba25, Some(0xbfcfe9fae1181f54)), // 346
    (0xbfcccb3236cdc675, 0x3fef2e0a214e870f, Some(0xbfcd8d16c1491594)), // 347
    (0xbfca9cd9ac4258f6, 0x3fef4cfc327a0080, Some(0xbfcb350dac76234c)), // 348
    (0xbfc86c6ddd76624f, 0x3fef697d6938b6c2, Some(0xbfc8e174375dceb6)), // 349
    (0xbfc63a1a7e0b738a, 0x3fef838b8c811c17, Some(0xbfc691e1ebc5cbbc)), // 350
    (0xbfc4060b67a85375, 0x3fef9b24942fe45c, Some(0xbfc445f0fbb1cf92)), // 351
    (0xbfc1d06c968d9e19, 0x3fefb046a930947a, Some(0xbfc1fd3df8664fe5)), // 352
    (0xbfbf32d44c4f62d3, 0x3fefc2f025a23e8b, Some(0xbfbf6ecf19881d31)), // 353
    (0xbfbac2609b3c576c, 0x3fefd31f94f867c6, Some(0xbfbae81c75231d97)), // 354
    (0xbfb64fd6b8c28103, 0x3fefe0d3b41815a2, Some(0xbfb665a8349d55e1)), // 355
    (0xbfb1db8f6d6a5128, 0x3fefec0b7170fff6, Some(0xbfb1e6b93a693204)), // 356
    (0xbfaacbc748efc90e, 0x3feff4c5ed12e61d, Some(0xbfaad53144273e72)), // 357
    (0xbfa1de58c9f7dc27, 0x3feffb0278bf0567, Some(0xbfa1e12295d61fc2)), // 358
    (0xbf91df0b2b89dd1e, 0x3feffec097f5af8a, Some(0xbf91dfbd9410a422)), // 359
];
