"""Frozen exact tables generated by scripts/freeze_series.py.

Do not edit by hand; regenerate with the script. The live recurrence
in series.py remains the source of truth and the test suite compares
low orders of these tables against it.
"""

# series coefficient encoding: (k, [(num, den, pi_pow), ...]) means
# the s**(k/2) coefficient equals sum of num/den * pi**pi_pow.
SERIES = {'tilde_sigma': {'max_tau': 24, 'terms': [(6, [(-1, 3, -1)]), (10, [(2, 45, -1)]), (12, [(-1, 27, -2)]), (14, [(-1, 315, -1)]), (16, [(11, 1350, -2)]), (18, [(2, 14175, -1), (-1, 243, -3)]), (20, [(-457, 496125, -2)]), (22, [(-2, 467775, -1), (121, 97200, -3)]), (24, [(941, 13395375, -2), (-1, 2187, -4)])]}, 'tilde_sigma_b_plus': {'max_tau': 24, 'terms': [(2, [(1, 5, 0)]), (4, [(1, 525, 0)]), (6, [(-2, 7875, 0)]), (7, [(8, 23625, -1)]), (8, [(-89, 3031875, 0)]), (9, [(8, 354375, -1)]), (10, [(-3158, 1773646875, 0)]), (11, [(1168, 955040625, -1)]), (12, [(-10138, 186232921875, 0)]), (13, [(-5032, 558698765625, -1)]), (14, [(4052, 2261399765625, 0), (128, 3906984375, -2)]), (15, [(-250736, 35198022234375, -1)]), (16, [(133302011, 347384924996484375, 0), (2048, 527442890625, -2)]), (17, [(-3633296, 4986386483203125, -1)]), (18, [(461021234, 15632321624841796875, 0), (293248, 957308846484375, -2)]), (19, [(-35033424544, 833322991231951171875, -1)]), (20, [(213044930642, 163592245803969404296875, 0), (1581568, 161785195055859375, -2)]), (21, [(-20760173272, 23213997612890068359375, -1), (2048, 646117541015625, -3)]), (22, [(168650396, 20280030471566455078125, 0), (-22452444928, 27468699342559083984375, -2)]), (23, [(2350475323574512, 22107038136719405449658203125, -1), (47104, 87225868037109375, -3)]), (24, [(-12228578912114, 2834235658553769929443359375, 0), (-31836380575744, 198461352749989381787109375, -2)])]}, 'tilde_sigma_b': {'max_tau': 24, 'terms': [(2, [(1, 3, 0)]), (4, [(-1, 45, 0)]), (5, [(8, 135, -1)]), (6, [(-2, 189, 0)]), (7, [(8, 567, -1)]), (8, [(-19, 14175, 0)]), (9, [(8, 23625, -1)]), (10, [(2, 31185, 0), (128, 91125, -2)]), (11, [(-848, 1403325, -1)]), (12, [(34282, 638512875, 0), (512, 893025, -2)]), (13, [(-3444248, 22347950625, -1)]), (14, [(332, 39092625, 0), (58496, 843908625, -2)]), (15, [(-125072, 13408770375, -1), (2048, 61509375, -3)]), (16, [(2173, 488462349375, 0), (-1128448, 61267766175, -2)]), (17, [(636541328, 153865640053125, -1), (34816, 1808375625, -3)]), (18, [(-50730998, 194896477400625, 0), (-19456143488, 2157135934078125, -2)]), (19, [(77641942432, 61392390381196875, -1), (16187392, 3987468253125, -3)]), (20, [(-1636183342, 32157918771103125, 0), (-5175827968, 3882844681340625, -2), (32768, 41518828125, -4)]), (21, [(35999403112, 312120976307765625, -1), (-60459008, 225159040693125, -3)]), (22, [(-386089412, 201717854109646875, 0), (329397813674752, 2777301729445915546875, -2), (720896, 1220653546875, -4)]), (23, [(-172630448180272, 7688476009389190640625, -1), (-1947683559424, 5137003513413646875, -3)]), (24, [(3608845537142, 3028793579456347828125, 0), (91793617172322304, 1002605924329975512421875, -2), (158203904, 897180356953125, -4)])]}, 'sigma_b_plus': {'max_tau': 24, 'terms': [(3, [(1, 3, -1)]), (5, [(-1, 15, -1)]), (6, [(2, 27, -2)]), (7, [(2, 315, -1)]), (8, [(-16, 675, -2)]), (9, [(-1, 2835, -1), (4, 243, -3)]), (10, [(622, 165375, -2)]), (11, [(2, 155925, -1), (-44, 6075, -3)]), (12, [(-5224, 13395375, -2), (8, 2187, -4)]), (13, [(-2, 6081075, -1), (11908, 7441875, -3)]), (14, [(333836, 11345882625, -2), (-112, 54675, -4)]), (15, [(4, 638512875, -1), (-708496, 3013959375, -3), (16, 19683, -5)]), (16, [(-9822016, 5752362490875, -2), (7744, 13395375, -4)]), (17, [(-1, 10854718875, -1), (458913368, 17869765134375, -3), (-272, 492075, -5)]), (18, [(20418518, 258856312089375, -2), (-4933504, 45209390625, -4), (32, 177147, -6)]), (19, [(2, 1856156927625, -1), (-6686064964, 3019990307709375, -3), (114304, 602791875, -5)]), (20, [(-1111964888, 374047370969146875, -2), (20689753384, 1340232385078125, -4), (-128, 885735, -6)]), (21, [(-2, 194896477400625, -1), (89146386548, 570778168157071875, -3), (-1520912, 34875815625, -5), (64, 1594323, -7)]), (22, [(415119098428, 4456026330355446721875, -2), (-35818291792, 20590843007109375, -4), (316448, 5425126875, -6)]), (23, [(4, 49308808782358125, -1), (-1523962682656, 164954890597393771875, -3), (38985357328, 5169467771015625, -5), (-1472, 39858075, -7)]), (24, [(-230716175776, 93576552937464381159375, -2), (437233291750048, 2696926844542164609375, -4), (-173554432, 10985881921875, -6), (128, 14348907, -8)])]}, 'sigma_pv': {'max_tau': 24, 'terms': [(2, [(-1, 1, -1)]), (4, [(-1, 1, -2)]), (6, [(-1, 1, -3)]), (8, [(1, 9, -2), (-1, 1, -4)]), (10, [(5, 36, -3), (-1, 1, -5)]), (12, [(-2, 225, -2), (1, 6, -4), (-1, 1, -6)]), (14, [(-7, 675, -3), (7, 36, -5), (-1, 1, -7)]), (16, [(1, 2205, -2), (-121, 8100, -4), (2, 9, -6), (-1, 1, -8)]), (18, [(761, 1587600, -3), (-73, 3600, -5), (1, 4, -7), (-1, 1, -9)]), (20, [(-2, 127575, -2), (1349, 1428840, -4), (-19, 720, -6), (5, 18, -8), (-1, 1, -10)]), (22, [(-671, 44651250, -3), (21307, 14288400, -5), (-539, 16200, -7), (11, 36, -9), (-1, 1, -11)]), (24, [(2, 5145525, -2), (-577, 11907000, -4), (1261, 571536, -6), (-221, 5400, -8), (1, 3, -10), (-1, 1, -12)])]}, 'sigma_b': {'max_tau': 24, 'terms': [(1, [(1, 1, -1)]), (2, [(2, 1, -2)]), (3, [(-1, 3, -1), (4, 1, -3)]), (4, [(-8, 9, -2), (8, 1, -4)]), (5, [(1, 15, -1), (-20, 9, -3), (16, 1, -5)]), (6, [(142, 675, -2), (-16, 3, -4), (32, 1, -6)]), (7, [(-2, 315, -1), (448, 675, -3), (-112, 9, -5), (64, 1, -7)]), (8, [(-1136, 33075, -2), (3872, 2025, -4), (-256, 9, -6), (128, 1, -8)]), (9, [(1, 2835, -1), (-41428, 297675, -3), (1168, 225, -5), (-64, 1, -7), (256, 1, -9)]), (10, [(19046, 4465125, -2), (-86336, 178605, -4), (608, 45, -6), (-1280, 9, -8), (512, 1, -10)]), (11, [(-2, 155925, -1), (505252, 22325625, -3), (-1363648, 893025, -5), (68992, 2025, -7), (-2816, 9, -9), (1024, 1, -11)]), (12, [(-658136, 1620840375, -2), (1280408, 13395375, -4), (-161408, 35721, -6), (56576, 675, -8), (-2048, 3, -10), (2048, 1, -12)]), (13, [(2, 6081075, -1), (-72782476, 24312605625, -3), (70775744, 200930625, -5), (-3793088, 297675, -7), (136448, 675, -9), (-13312, 9, -11), (4096, 1, -13)]), (14, [(57122836, 1917454163625, -2), (-400816, 25727625, -4), (34023424, 28704375, -6), (-4417024, 127575, -8), (971264, 2025, -10), (-28672, 9, -12), (8192, 1, -14)]), (15, [(-4, 638512875, -1), (997878802576, 3019990307709375, -3), (-981802064, 14587563375, -5), (16677632, 4465125, -7), (-16311808, 178605, -9), (151552, 135, -11), (-20480, 3, -13), (16384, 1, -15)]), (16, [(-49292224, 28761812454375, -2), (10855578713152, 5033317179515625, -4), (-18818625536, 72937816875, -6), (107117056, 9568125, -8), (-209985536, 893025, -10), (1753088, 675, -12), (-131072, 9, -14), (32768, 1, -16)]), (17, [(1, 10854718875, -1), (-92966878232, 3019990307709375, -3), (14240575963408, 1294281560446875, -5), (-39772444928, 43762690125, -7), (1296099584, 40186125, -9), (-35320832, 59535, -11), (12046336, 2025, -13), (-278528, 9, -15), (65536, 1, -17)]), (18, [(5907324778, 74809474193829375, -2), (-11700745801856, 45299854615640625, -4), (6550890543503584, 135899563846921875, -6), (-496802816, 165391875, -8), (2008648192, 22325625, -10), (-438009856, 297675, -12), (3039232, 225, -14), (-65536, 1, -16), (131072, 1, -18)]), (19, [(-2, 1856156927625, -1), (19113708690404, 7854994790352084375, -3), (-1663656637312, 1058957640365625, -5), (15497028087658496, 81539738308153125, -7), (-45923436544, 4862521125, -9), (49096846336, 200930625, -11), (-3211329536, 893025, -13), (6848512, 225, -15), (-1245184, 9, -17), (262144, 1, -19)]), (20, [(-401543476072, 135031100919862021875, -2), (15947547321962584, 589124609276406328125, -4), (-644304205336192, 81539738308153125, -6), (18834294086066176, 27179912769384375, -8), (-1248082307072, 43762690125, -10), (8690272256, 13395375, -12), (-1549631488, 178605, -14), (27590656, 405, -16), (-2621440, 9, -18), (524288, 1, -20)]), (21, [(2, 194896477400625, -1), (-9761613999493652, 59548715505659151646875, -3), (7165309888071152, 36068853629167734375, -5), (-1221332332028096, 34945602132065625, -7), (46157577563966464, 19414223406703125, -9), (-867854488576, 10419688125, -11), (16163643392, 9568125, -13), (-2640756736, 127575, -15), (102301696, 675, -17), (-1835008, 3, -19), (1048576, 1, -21)]), (22, [(2906087534684, 31192184312488127053125, -2), (-21318132266013244208, 8526293356492105803984375, -4), (556119886507233376, 482011043953423359375, -6), (-9387928190984192, 66714331343034375, -8), (19195234218631168, 2470901160853125, -10), (-1393856512, 5893965, -12), (34763948032, 8037225, -14), (-970326016, 19845, -16), (226361344, 675, -18), (-11534336, 9, -20), (2097152, 1, -22)]), (23, [(-4, 49308808782358125, -1), (68213390583697696, 7205394576184757349271875, -3), (-702109055444098862704, 31263075640471054614609375, -5), (50743574870722845632, 8836869139146094921875, -7), (-92092412794867712, 174728010660328125, -9), (9940896634080354304, 407698691540765625, -11), (-47809277734912, 72937816875, -13), (313228034048, 28704375, -15), (-102229999616, 893025, -17), (1495269376, 2025, -19), (-24117248, 9, -21), (4194304, 1, -23)]), (24, [(-122051834409056, 49501996503918657633309375, -2), (6959844818241336687968, 34045489372472978475309609375, -4), (-468973647850664588032, 3091952535870763643203125, -6), (406785094585150749056, 15906364450462970859375, -8), (-151948632269553664, 81539738308153125, -10), (78350363290836992, 1058957640365625, -12), (-5190988464128, 2917512675, -14), (202211393536, 7441875, -16), (-237446889472, 893025, -18), (1092616192, 675, -20), (-16777216, 3, -22), (8388608, 1, -24)])]}}

# far-expansion encoding: each (num, den, p_num, p_den) term
# contributes (num/den) * x**(p_num/p_den) to sigma at large x.
ASYMPTOTES = {'sigma_b': {'terms': [(1, 4, 1, 1), (1, 4, 1, 2), (1, 16, 0, 2), (-1, 32, -1, 2), (1, 64, -2, 2), (-13, 512, -3, 2), (5, 128, -4, 2), (-413, 4096, -5, 2), (131, 512, -6, 2), (-119197, 131072, -7, 2), (6575, 2048, -8, 2), (-15278735, 1048576, -9, 2), (1080091, 16384, -10, 2), (-6115520681, 16777216, -11, 2)]}, 'sigma_b_plus': {'terms': [(1, 4, 1, 1), (-1, 4, 1, 2), (1, 16, 0, 2), (1, 32, -1, 2), (1, 64, -2, 2), (13, 512, -3, 2), (5, 128, -4, 2), (413, 4096, -5, 2), (131, 512, -6, 2), (119197, 131072, -7, 2), (6575, 2048, -8, 2), (15278735, 1048576, -9, 2), (1080091, 16384, -10, 2), (6115520681, 16777216, -11, 2)]}, 'tilde_sigma_b': {'terms': [(1, 4, 1, 1), (1, 4, 1, 2), (-7, 16, 0, 2), (15, 32, -1, 2), (-15, 64, -2, 2), (-45, 512, -3, 2), (45, 128, -4, 2), (-2925, 4096, -5, 2), (675, 512, -6, 2), (-431325, 131072, -7, 2), (19575, 2048, -8, 2), (-38894175, 1048576, -9, 2), (2500875, 16384, -10, 2), (-12954623625, 16777216, -11, 2)]}, 'tilde_sigma_b_plus': {'terms': [(1, 4, 1, 1), (-1, 4, 1, 2), (9, 16, 0, 2), (-15, 32, -1, 2), (-15, 64, -2, 2), (45, 512, -3, 2), (45, 128, -4, 2), (2925, 4096, -5, 2), (675, 512, -6, 2), (431325, 131072, -7, 2), (19575, 2048, -8, 2), (38894175, 1048576, -9, 2), (2500875, 16384, -10, 2), (12954623625, 16777216, -11, 2)]}, 'sigma_pv': {'terms': [(-1, 4, 2, 1), (-1, 4, 0, 1), (-1, 4, -2, 1), (-5, 2, -4, 1), (-131, 2, -6, 1), (-6575, 2, -8, 1), (-1080091, 4, -10, 1), (-32967214, 1, -12, 1), (-11212856393, 2, -14, 1), (-2534581701995, 2, -16, 1)]}, 'tilde_sigma': {'terms': [(-1, 4, 2, 1), (3, 4, 0, 1), (-9, 4, -2, 1), (-9, 2, -4, 1), (-243, 2, -6, 1), (-10611, 2, -8, 1), (-1595619, 4, -10, 1), (-45770022, 1, -12, 1), (-14874878313, 2, -14, 1), (-3247979979951, 2, -16, 1)]}}
