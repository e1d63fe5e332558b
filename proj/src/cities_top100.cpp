#include "leotopo/traffic.hpp"

namespace leotopo {

// Top 100 metro areas by GDP (PPP-weighted projection style ranking).
// Keep in sync with data/cities_top100_gdp.csv.
const char* bundled_cities_csv() {
    return
        "id,name,lat_deg,lon_deg,gdp_rank\n"
        "1,Shanghai,31.23,121.47,1\n"
        "2,Tokyo,35.68,139.69,2\n"
        "3,Beijing,39.90,116.41,3\n"
        "4,New York,40.71,-74.01,4\n"
        "5,Guangzhou,23.13,113.26,5\n"
        "6,Shenzhen,22.54,114.06,6\n"
        "7,Los Angeles,34.05,-118.24,7\n"
        "8,Delhi,28.61,77.21,8\n"
        "9,Seoul,37.57,126.98,9\n"
        "10,Jakarta,-6.21,106.85,10\n"
        "11,London,51.51,-0.13,11\n"
        "12,Paris,48.86,2.35,12\n"
        "13,Mumbai,19.08,72.88,13\n"
        "14,Chongqing,29.56,106.55,14\n"
        "15,Mexico City,19.43,-99.13,15\n"
        "16,Sao Paulo,-23.55,-46.63,16\n"
        "17,Chicago,41.88,-87.63,17\n"
        "18,Cairo,30.04,31.24,18\n"
        "19,Moscow,55.76,37.62,19\n"
        "20,Osaka,34.69,135.50,20\n"
        "21,Istanbul,41.01,28.98,21\n"
        "22,Suzhou,31.30,120.58,22\n"
        "23,Chengdu,30.57,104.07,23\n"
        "24,Bangkok,13.76,100.50,24\n"
        "25,Tianjin,39.34,117.36,25\n"
        "26,Wuhan,30.59,114.31,26\n"
        "27,Manila,14.60,120.98,27\n"
        "28,Hong Kong,22.32,114.17,28\n"
        "29,Hangzhou,30.27,120.15,29\n"
        "30,Buenos Aires,-34.60,-58.38,30\n"
        "31,Singapore,1.35,103.82,31\n"
        "32,Kolkata,22.57,88.36,32\n"
        "33,Houston,29.76,-95.37,33\n"
        "34,Dallas,32.78,-96.80,34\n"
        "35,Tehran,35.69,51.39,35\n"
        "36,Nanjing,32.06,118.80,36\n"
        "37,Washington,38.91,-77.04,37\n"
        "38,San Francisco,37.77,-122.42,38\n"
        "39,Kuala Lumpur,3.14,101.69,39\n"
        "40,Riyadh,24.71,46.68,40\n"
        "41,Bangalore,12.97,77.59,41\n"
        "42,Rio de Janeiro,-22.91,-43.17,42\n"
        "43,Lima,-12.05,-77.04,43\n"
        "44,Bogota,4.71,-74.07,44\n"
        "45,Ho Chi Minh City,10.82,106.63,45\n"
        "46,Chennai,13.08,80.27,46\n"
        "47,Boston,42.36,-71.06,47\n"
        "48,Philadelphia,39.95,-75.17,48\n"
        "49,Changsha,28.23,112.94,49\n"
        "50,Qingdao,36.07,120.38,50\n"
        "51,Xian,34.34,108.94,51\n"
        "52,Zhengzhou,34.75,113.63,52\n"
        "53,Lagos,6.52,3.38,53\n"
        "54,Karachi,24.86,67.01,54\n"
        "55,Dhaka,23.81,90.41,55\n"
        "56,Atlanta,33.75,-84.39,56\n"
        "57,Miami,25.76,-80.19,57\n"
        "58,Hyderabad,17.39,78.49,58\n"
        "59,Johannesburg,-26.20,28.05,59\n"
        "60,Santiago,-33.45,-70.67,60\n"
        "61,Madrid,40.42,-3.70,61\n"
        "62,Toronto,43.65,-79.38,62\n"
        "63,Milan,45.46,9.19,63\n"
        "64,Cologne,50.94,6.96,64\n"
        "65,Dubai,25.20,55.27,65\n"
        "66,Ahmedabad,23.02,72.57,66\n"
        "67,Taipei,25.03,121.57,67\n"
        "68,Nagoya,35.18,136.91,68\n"
        "69,Dongguan,23.02,113.75,69\n"
        "70,Foshan,23.02,113.12,70\n"
        "71,Monterrey,25.67,-100.31,71\n"
        "72,Guadalajara,20.66,-103.35,72\n"
        "73,Seattle,47.61,-122.33,73\n"
        "74,Phoenix,33.45,-112.07,74\n"
        "75,Baghdad,33.31,44.37,75\n"
        "76,Pune,18.52,73.86,76\n"
        "77,Sydney,-33.87,151.21,77\n"
        "78,Melbourne,-37.81,144.96,78\n"
        "79,Shenyang,41.80,123.43,79\n"
        "80,Dalian,38.91,121.61,80\n"
        "81,Ningbo,29.87,121.54,81\n"
        "82,Wuxi,31.57,120.30,82\n"
        "83,Busan,35.18,129.08,83\n"
        "84,Jeddah,21.49,39.19,84\n"
        "85,Luanda,-8.84,13.23,85\n"
        "86,Nairobi,-1.29,36.82,86\n"
        "87,Brasilia,-15.79,-47.88,87\n"
        "88,Tel Aviv,32.08,34.78,88\n"
        "89,Hanoi,21.03,105.85,89\n"
        "90,Surabaya,-7.25,112.75,90\n"
        "91,Detroit,42.33,-83.05,91\n"
        "92,Minneapolis,44.98,-93.27,92\n"
        "93,San Diego,32.72,-117.16,93\n"
        "94,Denver,39.74,-104.99,94\n"
        "95,Frankfurt,50.11,8.68,95\n"
        "96,Rome,41.90,12.50,96\n"
        "97,Barcelona,41.39,2.17,97\n"
        "98,Munich,48.14,11.58,98\n"
        "99,Amsterdam,52.37,4.90,99\n"
        "100,Casablanca,33.57,-7.59,100\n"
        ;
}

}  // namespace leotopo
