#pragma once

// Per-paper citation counts of the 14 Derek de Solla Price medallists,
// Scopus snapshot of 21 February 2023. One column per author, top 145 ranks
// at most; an empty cell means the author has no paper at that rank.
// Transcribed verbatim, including the zero-cited rows printed for Narin and
// White. Corrections are applied in code (see dataset.hpp), never here.

#include <cstdint>
#include <string_view>

namespace citeidx::fixtures {

inline constexpr std::string_view price_scopus_2023_tsv = R"tsv(rank	Leydesdorff	Glänzel	Moed	Van Raan	Rousseau	Schubert	Martin	Narin	Garfield	Braun	Small	Egghe	Ingwersen	White
1	3964	534	417	522	1050	1858	1828	803	1888	449	2846	1455	482	1029
2	647	449	417	455	484	449	728	780	1711	362	592	478	414	213
3	544	417	380	381	478	362	411	519	1635	255	540	242	348	178
4	479	364	350	350	265	273	391	481	597	158	410	206	232	148
5	424	273	303	303	242	255	371	443	589	151	242	153	166	124
6	422	255	290	290	175	211	362	354	430	147	197	124	156	123
7	410	249	288	284	153	159	282	339	264	138	193	110	155	104
8	401	220	248	283	126	158	244	306	255	135	190	107	133	72
9	376	211	197	276	118	155	223	283	252	127	186	88	113	54
10	352	201	183	206	111	151	196	226	238	120	157	81	70	50
11	352	188	182	172	110	147	179	193	238	119	154	71	57	35
12	301	163	174	166	97	133	131	183	178	96	151	70	56	32
13	291	159	166	157	96	127	128	159	155	77	144	70	49	29
14	266	155	152	152	88	120	122	151	154	75	129	68	46	28
15	252	147	146	150	87	119	114	138	153	73	113	65	45	25
16	242	145	122	146	75	105	101	121	151	69	112	50	42	24
17	241	141	118	142	74	98	77	114	139	67	111	48	42	23
18	232	135	118	136	72	92	73	94	132	61	102	47	41	21
19	225	133	117	130	70	89	72	87	114	59	98	46	39	20
20	221	127	103	111	67	75	69	81	113	57	90	45	39	19
21	184	126	95	110	66	73	68	76	111	55	81	42	38	17
22	179	126	92	103	64	73	66	73	91	55	79	41	35	15
23	171	121	88	98	63	72	65	73	88	52	71	40	35	5
24	166	111	80	94	61	71	64	68	83	52	57	40	33	5
25	165	109	76	92	58	70	63	67	74	51	51	39	29	2
26	157	108	75	86	56	69	58	61	73	47	49	35	29	2
27	154	96	75	82	56	69	57	61	69	46	47	34	28	1
28	147	94	73	81	55	64	55	55	65	45	44	34	27	1
29	147	92	71	81	51	63	50	54	64	45	43	34	27	0
30	147	89	70	77	49	62	48	50	63	45	41	32	26	0
31	141	89	69	76	48	62	48	43	63	43	40	30	25	
32	138	89	69	75	48	57	47	43	53	42	39	29	24	
33	135	85	63	73	47	53	46	43	51	40	38	29	24	
34	133	85	62	72	46	52	46	42	49	40	34	28	24	
35	133	84	61	72	45	47	45	41	45	39	21	27	23	
36	129	84	60	68	45	46	40	40	42	37	21	26	23	
37	129	83	60	65	45	46	40	40	39	37	20	25	23	
38	127	80	58	63	45	45	40	38	30	36	19	24	22	
39	127	80	57	62	44	45	32	37	28	34	18	24	22	
40	126	78	57	60	44	43	32	34	27	33	17	24	22	
41	125	76	56	59	43	41	31	32	27	33	17	24	18	
42	125	76	55	59	43	42	28	27	25	33	15	24	17	
43	125	75	53	59	43	40	24	24	23	32	14	23	16	
44	125	75	53	55	42	37	23	21	22	31	10	22	16	
45	124	75	52	52	42	36	23	21	22	31	9	22	15	
46	123	74	52	51	42	36	23	20	21	30	9	22	15	
47	122	73	50	48	41	36	22	18	21	29	6	22	14	
48	122	73	49	48	40	33	21	18	21	28	4	22	14	
49	118	73	49	47	39	32	21	17	21	28	4	20	13	
50	108	72	47	45	39	31	21	14	21	27	4	20	13	
51	106	72	45	41	39	31	20	12	20	27	4	20	13	
52	102	71	44	41	37	27	20	12	20	27	2	19	12	
53	100	71	43	39	37	27	20	11	20	27	1	19	12	
54	98	70	43	39	33	27	17	11	19	26	1	18	11	
55	97	69	41	39	32	27	16	11	18	26	1	18	10	
56	94	66	41	38	32	26	14	9	18	26	1	18	10	
57	94	64	39	38	30	26	11	7	17	25	1	18	9	
58	93	63	39	37	30	25	9	6	17	25		18	8	
59	93	62	36	37	29	23	9	6	17	25		17	8	
60	92	62	35	36	29	23	9	6	16	25		17	8	
61	91	62	34	36	28	23	8	5	16	25		17	8	
62	90	59	33	35	28	23	7	4	15	24		17	7	
63	89	59	32	34	28	22	7	2	15	24		16	7	
64	87	57	30	32	27	22	7	1	14	24		16	6	
65	87	57	29	31	27	21	7	0	14	23		16	5	
66	87	56	29	31	27	20	6	0	14	23		16	5	
67	87	55	28	30	27	19	6	0	14	23		16	4	
68	86	54	27	29	27	17	5	0	14	22		15	4	
69	83	54	27	29	26	17	5		13	22		14	4	
70	83	53	27	28	26	16	5		13	21		14	4	
71	83	52	25	28	25	15	5		12	21		14	4	
72	82	52	25	28	24	15	4		12	21		14	3	
73	82	52	23	27	24	15	4		12	21		14	3	
74	82	52	23	25	24	15	4		12	20		14	3	
75	80	51	22	24	24	14	4		12	19		14	3	
76	80	49	22	24	23	14	4		12	19		13	3	
77	80	48	22	24	23	14	3		10	19		13	2	
78	79	48	19	23	23	14	3		10	18		13	2	
79	79	48	18	22	23	13	2		10	18		13	2	
80	78	47	16	21	23	13	2		9	17		12	2	
81	78	46	16	21	23	13	1		9	17		12	1	
82	77	45	15	20	23	13	1		9	16		12	1	
83	77	45	14	20	22	13	1		9	16		11	1	
84	77	44	13	20	22	12	1		8	16		11	1	
85	76	44	12	20	21	12	1		7	16		11	1	
86	76	43	12	18	21	12			7	16		11	1	
87	76	43	11	18	21	12			7	16		11	1	
88	75	42	11	17	21	10			6	16		11	1	
89	75	41	10	17	20	10			6	15		11		
90	74	40	10	17	20	9			6	15		10		
91	74	38	9	17	20	9			6	15		10		
92	73	38	9	13	20	9			6	15		10		
93	71	38	9	13	20	9			5	15		10		
94	70	36	8	13	19	8			5	15		10		
95	69	36	8	13	19	8			5	15		10		
96	68	36	8	12	18	8			5	14		10		
97	68	35	7	11	18	7			5	14		10		
98	68	34	7	10	18	7			5	14		10		
99	67	34	7	10	18	6			5	14		10		
100	66	34	7	10	17	6			5	14		10		
101	65	33	7	9	17	6			5	14		9		
102	64	33	6	9	17	6			5	14		9		
103	64	33	6	9	17	6			5	14		9		
104	63	32	6	9	17	6			4	14		9		
105	63	32	5	8	17	5			4	13		9		
106	62	32	5	8	16	5			4	13		9		
107	61	31	5	8	16	5				13		9		
108	61	31	4	8	16	4				13		9		
109	60	31	4	7	16	4				13		9		
110	60	30	4	7	16	4				13		9		
111	59	30	4	6	16	4				13		9		
112	59	30	4	5	15	4				13		9		
113	58	29	3	5	15	3				13		8		
114	58	28	3	4	15	3				12		8		
115	56	27	3	4	15	3				12		8		
116	56	27	2	4	14	3				12		8		
117	56	27	2	3	14	2				12		8		
118	55	27	2	3	14	2				12		8		
119	55	27	1	3	14	2				12		7		
120	55	27	1	2	14	2				11		7		
121	55	27	1	2	13	2				11		7		
122	53	26	1	1	13	2				10		7		
123	52	26	1	1	13	2				10		7		
124	51	26	1	1	13	2				10		7		
125	51	26	1		13	2				10		6		
126	49	26	1		13	2				10		6		
127	49	25	1		13	2				9		6		
128	48	25			13	2				9		6		
129	47	24			13	1				9		6		
130	46	24			13	1				9		6		
131	44	24			13	1				9		5		
132	44	23			13	1				9		5		
133	44	23			12	1				9		5		
134	44	23			12	1				9		5		
135	43	23			12	1				9		5		
136	43	23			12	1				8		5		
137	43	22			11	1				8		5		
138	43	21			11	1				8		5		
139	43	21			11	1				8		5		
140	43	21			11	1				8		5		
141	42	20			11	1				8		5		
142	42	19			11	1				8		5		
143	41	19			11					8		5		
144	41	18			11					8		4		
145	41	18			10					7		4		
)tsv";

// FNV-1a 64 of the table text above.
inline constexpr std::uint64_t price_scopus_2023_checksum = 0x33f0c911393c1d5dULL;

}  // namespace citeidx::fixtures
