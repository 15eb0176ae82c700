pub(crate) const Z_LIST: &[(&str, &str)] = &[
    ("Z1", r"( xi . yi ) |>i wi=xi |>i ( yi |>i wi+wi <|i yi) ; (xi |>i vi) <|i zi=xi |>i (vi <|i zi+ zi |>i vi) ; (ui <|i yi) <|i zi=ui <|i (yi . zi+ zi . yi)"),
    ("Z2", r"(xi <-i vi) . yi+(xi |>i vi) ->i yi =xi . (vi ->i yi+yi <-i vi)+xi <-i ( vi <|i yi + yi |>i vi)"),
    ("Z3", r"(ui ->i xi) . yi +( ui <|i xi ) ->i yi = ui ->i ( xi . yi + yi . xi )"),
    ("Z4", r"omi(ui, vi) . xi+ (ui *i vi ) ->i xi = ui ->i ( vi ->i xi + xi <-i vi)+ omi(ui,vi <|i xi+ xi |>i vi)"),
    ("Z5", r"(ui *i vi) <|i xi = ui <|i ( vi ->i xi+xi <-i vi)+ui *i ( vi <|i xi + xi |>i vi )"),
    ("Z6", r"( xi . yi ) <-i wi = xi . (yi <-i wi+wi ->i yi)+xi <-i (yi |>i wi+wi <|i yi)"),
    ("Z7", r"( xi <-i vi) <-i wi+ omi(xi |>i vi,wi) =xi . ( omi(vi, wi)+ omi(wi,vi))+xi <-i (vi *i wi +wi *i vi )"),
    ("Z8", r"(xi <-i vi) |>i wi+(xi |>i vi) *i wi = xi |>i ( vi *i wi+wi *i vi )"),
    ("Z9", r"( ui ->i xi) <-i wi+ omi( ui <|i xi,wi) = ui ->i ( xi <-i wi+wi ->i xi )+ omi(ui, wi <|i xi + xi |>i wi)"),
    ("Z10", r"(ui ->i xi) |>i wi+ (ui <|i xi) *i wi = ui <|i (xi <-i wi + wi ->i xi )+ui *i (xi |>i wi + wi <|i xi)"),
    ("Z11", r"omi(ui, vi) <-i wi+ omi( ui *i vi ,wi ) =ui ->i ( omi(vi, wi)+ omi(wi,vi))+ omi(ui,vi *i wi+ wi *i vi )"),
    ("Z12", r"omi(ui, vi) |>i wi+(ui *i vi) *i wi =ui <|i ( omi(vi, wi)+ omi(wi,vi))+ui *i (vi *i wi+wi *i vi)"),
    ("Z13", r"(x0 . x1) <-1 u1=x0 . (x1 <-1 u1+u1 ->1 x1)+ x0 <-2 (x1 |>1 u1+u1 <|1 x1)"),
    ("Z14", r"(x0 <-2 u1) . x1+( x0 |>2 u1) ->1 x1=x0 . (u1 ->1 x1+x1 <-1 u1)+x0 <-2 (u1 <|1 x1+x1 |>1 u1)"),
    ("Z15", r"(x0 <-2 u1) <-1 v1 + om1( x0 |>2 u1, v1)=x0 . ( om1(u1, v1)+ om1(v1, u1))+x0 <-2 (u1 *1 v1+v1 *1 u1)"),
    ("Z16", r"(u0 ->2 x1) . y1 + (u0 <|2 x1) ->1 y1=u0 ->2 ( x1 . y1+y1 . x1)"),
    ("Z17", r"(u0 ->2 x1) <-1 u1 + om1(u0 <|2 x1,u1)=u0 ->2 (x1 <-1 u1+u1 ->1 x1)+ om2(u0, x1 |>1 u1+u1 <|1 x1)"),
    ("Z18", r"om2(u0, u1) . x1 + (u0 *2 u1) ->1 x1=u0 ->2 (u1 ->1 x1+x1 <-1 u1) + om2(u0,u1 <|1 x1+x1 |>1 u1)"),
    ("Z19", r"om2(u0, u1) <-1 v1 + om1(u0 *2 u1, v1)=u0 ->2 ( om1(u1, v1)+ om1(v1, u1))+ om2(u0,u1 *1 v1+ v1 *1 u1)"),
    ("Z20", r"(x0 . x1) |>1 u1=x0 |>2 (x1 |>1 u1+u1 <|1 x1)"),
    ("Z21", r"( x0 |>2 u1) <|1 y1 =x0 |>2 (u1 <|1 y1+y1 |>1 u1)"),
    ("Z22", r"(x0 <-2 u1) |>1 v1+( x0 |>2 u1) *1 v1=x0 |>2 (u1 *1 v1+v1 *1 u1)"),
    ("Z23", r"(u0 <|2 x1) <|1 y1=u0 <|2 (x1 . y1+y1 . x1)"),
    ("Z24", r"(u0 ->2 x1) |>1 u1 + (u0 <|2 x1) *1 u1=u0 <|2 (x1 <-1 u1+u1 ->1 x1) + u0 *2 (x1 |>1 u1+u1 <|1 x1)"),
    ("Z25", r"(u0 *2 u1) <|1 x1=u0 <|2 (u1 ->1 x1+x1 <-1 u1) + u0 *2 (u1 <|1 x1+x1 |>1 u1)"),
    ("Z26", r"om2(u0, u1) |>1 v1 + (u0 *2 u1) *1 v1=u0 <|2 ( om1(u1, v1)+ om1(v1, u1)) + u0 *2 (u1 *1 v1+v1 *1 u1) )"),
    ("Z27", r"(x0 <-0 u0) . x1+ (x0 |>0 u0) ->2 x1=x0 . (u0 ->2 x1+x1 <-3 u0)+ x0 <-2 (u0 <|2 x1+x1 |>3 u0)"),
    ("Z28", r"(u0 ->0 x0) . x1+ (u0 <|0 x0) ->2 x1=u0 ->2 (x0 . x1+x1 . x0)"),
    ("Z29", r"om0(u0, v0) . x1+ (u0 *0 v0) ->2 x1= u0 ->2 (v0 ->2 x1+x1 <-3 v0)+ om2(u0,v0 <|2 x1+x1 |>3 v0)"),
    ("Z30", r"(x0 . y0) <-2 u1=x0 . (y0 <-2 u1+u1 ->3 y0)+x0 <-2 (y0 |>2 u1+u1 <|3 y0)"),
    ("Z31", r"(x0 <-0 u0) <-2 u1+ om2(x0 |>0 u0, u1)=x0 . ( om2(u0, u1)+ om3(u1, u0)) + x0 <-2 (u0 *2 u1+u1 *3 u0)"),
    ("Z32", r"(u0 ->0 x0) <-2 u1+ om2(u0 <|0 x0, u1)= u0 ->2 (x0 <-2 u1+u1 ->3 x0) + om2(u0, x0 |>2 u1+u1 <|3 x0)"),
    ("Z33", r"om0(u0, v0) <-2 u1+ om2(u0 *0 v0, u1)= u0 ->2 ( om2(v0, u1) + om3(u1, v0))+ om2(u0,v0 *2 u1+u1 *3 v0)"),
    ("Z34", r"(x0 . y0) |>2 u1=x0 |>2 (y0 |>2 u1+u1 <|3 y0)"),
    ("Z35", r"(x0 <-0 u0) |>2 u1 + (x0 |>0 u0) *2 u1=x0 |>2 (u0 *2 u1+u1 *3 u0)"),
    ("Z36", r"(u0 ->0 x0) |>2 u1+ (u0 <|0 x0) *2 u1=u0 <|2 (x0 <-2 u1+u1 ->3 x0)+ u0 *2 (x0 |>2 u1+u1 <|3 x0)"),
    ("Z37", r"om0(u0, v0) |>2 u1+ (u0 *0 v0) *2 u1=u0 <|2 ( om2(v0, u1)+ om3(u1, v0)) + u0 *2 (v0 *2 u1+u1 *3 v0)"),
    ("Z38", r"(x0 |>0 u0) <|2 x1=x0 |>2 (u0 <|2 x1+ x1 |>3 u0)"),
    ("Z39", r"(u0 <|0 x0) <|2 x1=u0 <|2 (x0 . x1+x1 . x0)"),
    ("Z40", r"(u0 *0 v0) <|2 x1=u0 <|2 (v0 ->2 x1+x1 <-3 v0)+ u0 *2 (v0 <|2 x1+x1 |>3 v0)"),
    ("Z41", r"(x1 <-3 u0) . x0+ (x1 |>3 u0) ->3 x0=x1 . (u0 ->0 x0+x0 <-0 u0) + x1 <-3 (u0 <|0 x0+x0 |>0 u0)"),
    ("Z42", r"(u1 ->3 x0) . y0 + (u1 <|3 x0) ->3 y0=u1 ->3 (x0 . y0+y0 . x0)"),
    ("Z43", r"om3(u1, u0) . x0 + (u1 *3 u0) ->3 x0=u1 ->3 (u0 ->0 x0+x0 <-0 u0)+ om3(u1,u0 <|0 x0+x0 |>0 u0)"),
    ("Z44", r"(x1 . x0) <-3 u0=x1 . (x0 <-0 u0+u0 ->0 x0) + x1 <-3 (x0 |>0 u0+u0 <|0 x0)"),
    ("Z45", r"(x1 <-3 u0) <-3 v0+ om3(x1 |>3 u0, v0)=x1 . ( om0(u0, v0)+ om0(v0, u0))+ x1 <-3 (u0 *0 v0+v0 *0 u0)"),
    ("Z46", r"(u1 ->3 x0) <-3 u0 + om3(u1 <|3 x0, u0)=u1 ->3 (x0 <-0 u0+u0 ->0 x0) + om3(u1, x0 |>0 u0+ u0 <|0 x0)"),
    ("Z47", r"om3(u1, u0) <-3 v0 + om3(u1 *3 u0, v0)=u1 ->3 ( om0(u0, v0)+ om0(v0, u0)) + om3(u1,u0 *0 v0+v0 *0 u0)"),
    ("Z48", r"(x1 . x0) |>3 u0=x1 |>3 (x0 |>0 u0+u0 <|0 x0)"),
    ("Z49", r"(x1 <-3 u0) |>3 v0+ (x1 |>3 u0) *3 v0=x1 |>3 (u0 *0 v0+v0 *0 u0)"),
    ("Z50", r"(u1 ->3 x0) |>3 u0+ (u1 <|3 x0) *3 u0=u1 <|3 (x0 <-0 u0+u0 ->0 x0)+ u1 *3 (x0 |>0 u0+u0 <|0 x0)"),
    ("Z51", r"om3(u1, u0) |>3 v0 + (u1 *3 u0) *3 v0=u1 <|3 ( om0(u0, v0) + om0(v0, u0))+ u1 *3 (u0 *0 v0+v0 *0 u0)"),
    ("Z52", r"(x1 |>3 u0) <|3 x0=x1 |>3 (u0 <|0 x0+x0 |>0 u0)"),
    ("Z53", r"(u1 <|3 x0) <|3 y0=u1 <|3 (x0 . y0+y0 . x0)"),
    ("Z54", r"(u1 *3 u0) <|3 x0=u1 <|3 (u0 ->0 x0+x0 <-0 u0)+ u1 *3 (u0 <|0 x0+x0 |>0 u0)"),
    ("Z55", r"(x0 <-2 u1) . y0+ (x0 |>2 u1) ->3 y0=x0 . (u1 ->3 y0+y0 <-2 u1)+ x0 <-2 (u1 <|3 y0+y0 |>2 u1)"),
    ("Z56", r"(u0 ->2 x1) . y0+ (u0 <|2 x1) ->3 y0= u0 ->2 (x1 . y0+y0 . x1)"),
    ("Z57", r"om2(u0, u1) . x0+ (u0 *2 u1) ->3 x0= u0 ->2 (u1 ->3 x0+x0 <-2 u1)+ om2(u0, u1 <|3 x0+ x0 |>2 u1)"),
    ("Z58", r"(x0 . x1) <-3 u0=x0 . (x1 <-3 u0+u0 ->2 x1)+ x0 <-2 (x1 |>3 u0+u0 <|2 x1)"),
    ("Z59", r"(x0 <-2 u1) <-3 v0+ om3(x0 |>2 u1, v0)=x0 . ( om3(u1, v0)+ om2(v0, u1))+ x0 <-2 (u1 *3 v0+v0 *2 u1)"),
    ("Z60", r"(u0 ->2 x1) <-3 v0+ om3(u0 <|2 x1, v0)= u0 ->2 (x1 <-3 v0+v0 ->2 x1)+ om2(u0, x1 |>3 v0+v0 <|2 x1)"),
    ("Z61", r"om2(u0, u1) <-3 v0+ om3(u0 *2 u1, v0)=u0 ->2 ( om3(u1, v0)+ om2(v0, u1))+ om2(u0, u1 *3 v0+ v0 *2 u1)"),
    ("Z62", r"(x0 . x1) |>3 u0=x0 |>2 (x1 |>3 u0+u0 <|2 x1)"),
    ("Z63", r"(x0 <-2 u1) |>3 v0+ (x0 |>2 u1) *3 v0=x0 |>2 (u1 *3 v0+v0 *2 u1)"),
    ("Z64", r"(u0 ->2 x1) |>3 v0+ (u0 <|2 x1) *3 v0=u0 <|2 (x1 <-3 v0+v0 ->2 x1)+ u0 *2 (x1 |>3 v0+v0 <|2 x1)"),
    ("Z65", r"om2(u0, u1) |>3 v0+ (u0 *2 u1) *3 v0=u0 <|2 ( om3(u1, v0)+ om2(v0, u1))+ u0 *2 (u1 *3 v0+v0 *2 u1)"),
    ("Z66", r"(x0 |>2 u1) <|3 y0=x0 |>2 (u1 <|3 y0+y0 |>2 u1)"),
    ("Z67", r"(u0 <|2 x1) <|3 y0=u0 <|2 (x1 . y0+y0 . x1)"),
    ("Z68", r"(u0 *2 u1) <|3 y0=u0 <|2 (u1 ->3 y0+y0 <-2 u1)+ u0 *2 (u1 <|3 y0+y0 |>2 u1)"),
    ("Z69", r"(x1 <-3 u0) . y1+ (x1 |>3 u0) ->1 y1=x1 . (u0 ->2 y1+y1 <-3 u0)+ x1 <-1 (u0 <|2 y1+y1 |>3 u0)"),
    ("Z70", r"(u1 ->3 x0) . x1 + (u1 <|3 x0) ->1 x1=u1 ->1 (x0 . x1+x1 . x0)"),
    ("Z71", r"om3(u1, u0) . x1+ (u1 *3 u0) ->1 x1=u1 ->1 (u0 ->2 x1+x1 <-3 u0)+ om1(u1, u0 <|2 x1+ x1 |>3 u0)"),
    ("Z72", r"(x1 . x0) <-1 u1=x1 . (x0 <-2 u1+u1 ->3 x0)+x1 <-1 (x0 |>2 u1+u1 <|3 x0)"),
    ("Z73", r"(x1 <-3 u0) <-1 u1+ om1(x1 |>3 u0, u1)=x1 . ( om2(u0, u1)+ om3(u1, u0)) + x1 <-1 (u0 *2 u1+u1 *3 u0)"),
    ("Z74", r"(u1 ->3 x0) <-1 v1 + om1(u1 <|3 x0, v1)=u1 ->1 (x0 <-2 v1+v1 ->3 x0) + om1(u1, x0 |>2 v1+ v1 <|3 x0)"),
    ("Z75", r"om3(u1, u0) <-1 v1+ om1(u1 *3 u0, v1)=u1 ->1 ( om2(u0, v1) + om3(v1, u0)) + om1(u1, u0 *2 v1+v1 *3 u0)"),
    ("Z76", r"(x1 . x0) |>1 u1=x1 |>1 (x0 |>2 u1+u1 <|3 x0)"),
    ("Z77", r"(x1 <-3 u0) |>1 u1+ (x1 |>3 u0) *1 u1=x1 |>1 (u0 *2 u1+u1 *3 u0)"),
    ("Z78", r"(u1 ->3 x0) |>1 v1 + (u1 <|3 x0) *1 v1=u1 <|1 (x0 <-2 v1+v1 ->3 x0)+ u1 *1 (x0 |>2 v1+v1 <|3 x0)"),
    ("Z79", r"om3(u1, u0) |>1 v1 + (u1 *3 u0) *1 v1= u1 <|1 ( om2(u0, v1)+ om3(v1, u0))+ u1 *1 (u0 *2 v1+v1 *3 u0)"),
    ("Z80", r"(x1 |>3 u0) <|1 y1=x1 |>1 (u0 <|2 y1+y1 |>3 u0)"),
    ("Z81", r"(u1 <|3 x0) <|1 x1=u1 <|1 (x0 . x1+x1 . x0)"),
    ("Z82", r"(u1 *3 u0) <|1 x1=u1 <|1 (u0 ->2 x1+x1 <-3 u0)+ u1 *1 (u0 <|2 x1+x1 |>3 u0)"),
    ("Z83", r"(x1 <-1 u1) . x0+ (x1 |>1 u1) ->3 x0=x1 . (u1 ->3 x0+x0 <-2 u1)+ x1 <-1 (u1 <|3 x0+x0 |>2 u1)"),
    ("Z84", r"(u1 ->1 x1) . x0 + (u1 <|1 x1) ->3 x0= u1 ->1 (x1 . x0+x0 . x1)"),
    ("Z85", r"om1(u1, v1) . x0 + (u1 *1 v1) ->3 x0=u1 ->1 (v1 ->3 x0+x0 <-2 v1)+ om1(u1,v1 <|3 x0+x0 |>2 v1)"),
    ("Z86", r"(x1 . y1) <-3 u0=x1 . (y1 <-3 u0+u0 ->2 y1)+ x1 <-1 (y1 |>3 u0+u0 <|2 y1)"),
    ("Z87", r"(x1 <-1 u1) <-3 u0+ om3(x1 |>1 u1, u0)=x1 . ( om3(u1, u0)+ om2(u0, u1))+ x1 <-1 (u1 *3 u0+u0 *2 u1)"),
    ("Z88", r"(u1 ->1 x1) <-3 u0 + om3(u1 <|1 x1, u0)= u1 ->1 (x1 <-3 u0+u0 ->2 x1) + om1(u1, x1 |>3 u0+u0 <|2 x1)"),
    ("Z89", r"om1(u1, v1) <-3 u0+ om3(u1 *1 v1, u0)=u1 ->1 ( om3(v1, u0)+ om2(u0, v1)) + om1(u1,v1 *3 u0+ u0 *2 v1)"),
    ("Z90", r"(x1 . y1) |>3 u0=x1 |>1 (y1 |>3 u0+u0 <|2 y1)"),
    ("Z91", r"(x1 <-1 u1) |>3 u0+ (x1 |>1 u1) *3 u0=x1 |>1 (u1 *3 u0+u0 *2 u1)"),
    ("Z92", r"(u1 ->1 x1) |>3 u0 + (u1 <|1 x1) *3 u0=u1 <|1 (x1 <-3 u0+u0 ->2 x1)+ u1 *1 (x1 |>3 u0+u0 <|2 x1)"),
    ("Z93", r"om1(u1, v1) |>3 u0 + (u1 *1 v1) *3 u0=u1 <|1 ( om3(v1, u0)+ om2(u0, v1))+ u1 *1 (v1 *3 u0+u0 *2 v1)"),
    ("Z94", r"(x1 |>1 u1) <|3 x0=x1 |>1 (u1 <|3 x0+x0 |>2 u1)"),
    ("Z95", r"(u1 <|1 x1) <|3 x0=u1 <|1 (x1 . x0+x0 . x1)"),
    ("Z96", r"(u1 *1 v1) <|3 x0=u1 <|1 (v1 ->3 x0+x0 <-2 v1)+ u1 *1 (v1 <|3 x0+x0 |>2 v1)"),
    ("Z97", r"phi(x0 <-2 u1)+ sig(x0 |>2 u1)=x0 . sig(u1) + x0 <-0 d(u1)"),
    ("Z98", r"phi(u0 ->2 x1)+ sig(u0 <|2 x1)=u0 ->0 phi(x1)"),
    ("Z99", r"phi om2(u0, u1) + sig(u0 *2 u1)=u0 ->0 sig(u1) + om0(u0, d(u1))"),
    ("Z100", r"d(x0 |>2 u1)=x0 |>0 d(u1)"),
    ("Z101", r"d(u0 <|2 x1)= u0 <|0 phi(x1)"),
    ("Z102", r"d(u0 *2 u1)= u0 <|0 sig(u1) + u0 *0 d(u1)"),
    ("Z103", r"phi(x1 <-3 u0)+ sig(x1 |>3 u0)= phi(x1) <-0 u0"),
    ("Z104", r"phi(u1 ->3 x0) + sig(u1 <|3 x0)= sig(u1) . x0+ d(u1) ->0 x0"),
    ("Z105", r"phi om3(u1, u0) + sig(u1 *3 u0)= sig(u1) <-0 u0+ om0(d(u1), u0)"),
    ("Z106", r"d(x1 |>3 u0)= phi(x1) |>0 u0"),
    ("Z107", r"d(u1 <|3 x0) =d(u1) <|0 x0"),
    ("Z108", r"d(u1 *3 u0))= sig(u1) |>0 u0 + d(u1) *0 u0"),
    ("Z109", r"sig(u1) . x1+ d(u1) ->2 x1=u1 ->1 x1"),
    ("Z110", r"phi(x1) <-2 u1=x1 <-1 u1"),
    ("Z111", r"sig(u1) <-2 v1 + om2(d(u1), v1)= om1(u1, v1)"),
    ("Z112", r"phi(x1) |>2 u1=x1 |>1 u1"),
    ("Z113", r"sig(u1) |>2 v1 + d(u1) *2 v1=u1 *1 v1"),
    ("Z114", r"d(u1) <|2 x1 =u1 <|1 x1"),
    ("Z115", r"x1 . sig(u1)+x1 <-3 d(u1)=x1 <-1 u1"),
    ("Z116", r"u1 ->3 phi(x1)=u1 ->1 x1"),
    ("Z117", r"u1 ->3 sig(v1) + om3(u1, d(v1))= om1(u1, v1)"),
    ("Z118", r"x1 |>3 d(u1)=x1 |>1 u1"),
    ("Z119", r"u1 <|3 phi(x1)=u1 <|1 x1"),
    ("Z120", r"u1 <|3 sig(v1) + u1 *3 d(v1)=u1 *1 v1"),
];

pub(crate) const ZZ_LIST: &[(&str, &str)] = &[
    ("ZZ1", r"( x0 . y0 ) |>0 w0=x0 |>0 ( y0 |>0 w0+w0 <|0 y0) ; (x0 |>0 v0) <|0 z0=x0 |>0 (v0 <|0 z0+ z0 |>0 v0) ; (u0 <|0 y0) <|0 z0=u0 <|0 (y0 . z0+ z0 . y0)"),
    ("ZZ2", r"(x0 <-0 v0) . y0+(x0 |>0 v0) ->0 y0 =x0 . (v0 ->0 y0+y0 <-0 v0)+x0 <-0 ( v0 <|0 y0 + y0 |>0 v0)"),
    ("ZZ3", r"(u0 ->0 x0) . y0 +( u0 <|0 x0 ) ->0 y0 = u0 ->0 ( x0 . y0 + y0 . x0 )"),
    ("ZZ4", r"om0(u0, v0) . x0+ (u0 *0 v0 ) ->0 x0 = u0 ->0 ( v0 ->0 x0 + x0 <-0 v0)+ om0(u0,v0 <|0 x0+ x0 |>0 v0)"),
    ("ZZ5", r"(u0 *0 v0) <|0 x0 = u0 <|0 ( v0 ->0 x0+x0 <-0 v0)+u0 *0 ( v0 <|0 x0 + x0 |>0 v0 )"),
    ("ZZ6", r"( x0 . y0 ) <-0 w0 = x0 . (y0 <-0 w0+w0 ->0 y0)+x0 <-0 (y0 |>0 w0+w0 <|0 y0)"),
    ("ZZ7", r"( x0 <-0 v0) <-0 w0+ om0(x0 |>0 v0,w0) =x0 . ( om0(v0, w0)+ om0(w0,v0))+x0 <-0 (v0 *0 w0 +w0 *0 v0 )"),
    ("ZZ8", r"(x0 <-0 v0) |>0 w0+(x0 |>0 v0) *0 w0 = x0 |>0 ( v0 *0 w0+w0 *0 v0 )"),
    ("ZZ9", r"( u0 ->0 x0) <-0 w0+ om0( u0 <|0 x0,w0) = u0 ->0 ( x0 <-0 w0+w0 ->0 x0 )+ om0(u0, w0 <|0 x0 + x0 |>0 w0)"),
    ("ZZ10", r"(u0 ->0 x0) |>0 w0+ (u0 <|0 x0) *0 w0 = u0 <|0 (x0 <-0 w0 + w0 ->0 x0 )+u0 *0 (x0 |>0 w0 + w0 <|0 x0)"),
    ("ZZ11", r"om0(u0, v0) <-0 w0+ om0( u0 *0 v0 ,w0 ) =u0 ->0 ( om0(v0, w0)+ om0(w0,v0))+ om0(u0,v0 *0 w0+ w0 *0 v0 )"),
    ("ZZ12", r"om0(u0, v0) |>0 w0+(u0 *0 v0) *0 w0 =u0 <|0 \b0g( om0(v0, w0)+ om0(w0,v0)\b0g)+u0 *0 (v0 *0 w0+w0 *0 v0)"),
    ("ZZ13", r"( x0 |>2 u1) *1 v1=x0 |>2 (u1 *1 v1+v1 *1 u1)"),
    ("ZZ14", r"(u0 *2 u1) *1 v1=u0 *2 (u1 *1 v1+v1 *1 u1) )"),
    ("ZZ15", r"(x0 . y0) |>2 u1=x0 |>2 (y0 |>2 u1+u1 <|3 y0)"),
    ("ZZ16", r"(x0 <-0 u0) |>2 u1 + (x0 |>0 u0) *2 u1=x0 |>2 (u0 *2 u1+u1 *3 u0)"),
    ("ZZ17", r"(u0 ->0 x0) |>2 u1+ (u0 <|0 x0) *2 u1=u0 *2 (x0 |>2 u1+u1 <|3 x0)"),
    ("ZZ18", r"om0(u0, v0) |>2 u1+ (u0 *0 v0) *2 u1=u0 *2 (v0 *2 u1+u1 *3 v0)"),
    ("ZZ19", r"(u1 <|3 x0) *3 u0=u1 *3 (x0 |>0 u0+u0 <|0 x0)"),
    ("ZZ20", r"(u1 *3 u0) *3 v0=u1 <|3 ( om0(u0, v0) + om0(v0, u0))+ u1 *3 (u0 *0 v0+v0 *0 u0)"),
    ("ZZ21", r"(u1 <|3 x0) <|3 y0=u1 <|3 (x0 . y0+y0 . x0)"),
    ("ZZ22", r"(u1 *3 u0) <|3 x0=u1 <|3 (u0 ->0 x0+x0 <-0 u0)+ u1 *3 (u0 <|0 x0+x0 |>0 u0)"),
    ("ZZ23", r"(x0 |>2 u1) *3 v0=x0 |>2 (u1 *3 v0+v0 *2 u1)"),
    ("ZZ24", r"(u0 *2 u1) *3 v0= u0 *2 (u1 *3 v0+v0 *2 u1)"),
    ("ZZ25", r"(x0 |>2 u1) <|3 y0=x0 |>2 (u1 <|3 y0+y0 |>2 u1)"),
    ("ZZ26", r"(u0 *2 u1) <|3 y0=u0 *2 (u1 <|3 y0+y0 |>2 u1)"),
    ("ZZ27", r"(u1 <|3 x0) *1 v1=u1 *1 (x0 |>2 v1+v1 <|3 x0)"),
    ("ZZ28", r"(u1 *3 u0) *1 v1= u1 *1 (u0 *2 v1+v1 *3 u0)"),
    ("ZZ29", r"(u1 *1 v1) *3 u0=u1 *1 (v1 *3 u0+u0 *2 v1)"),
    ("ZZ30", r"(u1 *1 v1) <|3 x0=u1 *1 (v1 <|3 x0+x0 |>2 v1)"),
    ("ZZ31", r"sig(x0 |>2 u1)=x0 . sig(u1) + x0 <-0 d(u1)"),
    ("ZZ32", r"sig(u0 *2 u1)=u0 ->0 sig(u1) + om0(u0, d(u1))"),
    ("ZZ33", r"d(x0 |>2 u1)=x0 |>0 d(u1)"),
    ("ZZ34", r"d(u0 *2 u1)= u0 <|0 sig(u1) + u0 *0 d(u1)"),
    ("ZZ35", r"sig(u1 <|3 x0)= sig(u1) . x0+ d(u1) ->0 x0"),
    ("ZZ36", r"sig(u1 *3 u0)= sig(u1) <-0 u0+ om0(d(u1), u0)"),
    ("ZZ37", r"d(u1 <|3 x0) =d(u1) <|0 x0"),
    ("ZZ38", r"d(u1 *3 u0))= sig(u1) |>0 u0 + d(u1) *0 u0"),
    ("ZZ39", r"sig(u1) |>2 v1 + d(u1) *2 v1=u1 *1 v1"),
    ("ZZ40", r"u1 <|3 sig(v1) + u1 *3 d(v1)=u1 *1 v1"),
];

pub(crate) const CZ_LIST: &[(&str, &str)] = &[
    ("CZ1", r"(xi <-i vi) . yi=xi . (vi ->i yi+yi <-i vi)"),
    ("CZ2", r"(ui ->i xi) . yi= ui ->i ( xi . yi + yi . xi )"),
    ("CZ3", r"omi(ui, vi) . xi+ (ui *i vi ) ->i xi = ui ->i ( vi ->i xi + xi <-i vi)"),
    ("CZ4", r"( xi . yi ) <-i wi = xi . (yi <-i wi+wi ->i yi)"),
    ("CZ5", r"( xi <-i vi) <-i wi =xi . ( omi(vi, wi)+ omi(wi,vi))+xi <-i (vi *i wi +wi *i vi )"),
    ("CZ6", r"( ui ->i xi) <-i wi = ui ->i ( xi <-i wi+wi ->i xi )"),
    ("CZ7", r"omi(ui, vi) <-i wi+ omi( ui *i vi ,wi ) =ui ->i ( omi(vi, wi)+ omi(wi,vi))+ omi(ui,vi *i wi+ wi *i vi )"),
    ("CZ8", r"(x0 . x1) <-1 u1=x0 . (x1 <-1 u1+u1 ->1 x1)"),
    ("CZ9", r"(x0 <-2 u1) . x1 =x0 . (u1 ->1 x1+x1 <-1 u1)"),
    ("CZ10", r"(x0 <-2 u1) <-1 v1=x0 . ( om1(u1, v1)+ om1(v1, u1))+x0 <-2 (u1 *1 v1+v1 *1 u1)"),
    ("CZ11", r"(u0 ->2 x1) . y1=u0 ->2 ( x1 . y1+y1 . x1)"),
    ("CZ12", r"(u0 ->2 x1) <-1 u1=u0 ->2 (x1 <-1 u1+u1 ->1 x1)"),
    ("CZ13", r"om2(u0, u1) . x1 + (u0 *2 u1) ->1 x1=u0 ->2 (u1 ->1 x1+x1 <-1 u1)"),
    ("CZ14", r"om2(u0, u1) <-1 v1 + om1(u0 *2 u1, v1)=u0 ->2 ( om1(u1, v1)+ om1(v1, u1))+ om2(u0,u1 *1 v1+ v1 *1 u1)"),
    ("CZ15", r"(x0 <-0 u0) . x1=x0 . (u0 ->2 x1+x1 <-3 u0)"),
    ("CZ16", r"(u0 ->0 x0) . x1=u0 ->2 (x0 . x1+x1 . x0)"),
    ("CZ17", r"om0(u0, v0) . x1+ (u0 *0 v0) ->2 x1= u0 ->2 (v0 ->2 x1+x1 <-3 v0)"),
    ("CZ18", r"(x0 . y0) <-2 u1=x0 . (y0 <-2 u1+u1 ->3 y0)"),
    ("CZ19", r"(x0 <-0 u0) <-2 u1=x0 . ( om2(u0, u1)+ om3(u1, u0)) + x0 <-2 (u0 *2 u1+u1 *3 u0)"),
    ("CZ20", r"(u0 ->0 x0) <-2 u1= u0 ->2 (x0 <-2 u1+u1 ->3 x0)"),
    ("CZ21", r"om0(u0, v0) <-2 u1+ om2(u0 *0 v0, u1)= u0 ->2 ( om2(v0, u1) + om3(u1, v0))+ om2(u0,v0 *2 u1+u1 *3 v0)"),
    ("CZ22", r"(x1 <-3 u0) . x0=x1 . (u0 ->0 x0+x0 <-0 u0)"),
    ("CZ23", r"(u1 ->3 x0) . y0 =u1 ->3 (x0 . y0+y0 . x0)"),
    ("CZ24", r"om3(u1, u0) . x0 + (u1 *3 u0) ->3 x0=u1 ->3 (u0 ->0 x0+x0 <-0 u0)"),
    ("CZ25", r"(x1 . x0) <-3 u0=x1 . (x0 <-0 u0+u0 ->0 x0)"),
    ("CZ26", r"(x1 <-3 u0) <-3 v0=x1 . ( om0(u0, v0)+ om0(v0, u0))+ x1 <-3 (u0 *0 v0+v0 *0 u0)"),
    ("CZ27", r"(u1 ->3 x0) <-3 u0 =u1 ->3 (x0 <-0 u0+u0 ->0 x0)"),
    ("CZ28", r"om3(u1, u0) <-3 v0 + om3(u1 *3 u0, v0)=u1 ->3 ( om0(u0, v0)+ om0(v0, u0)) + om3(u1,u0 *0 v0+v0 *0 u0)"),
    ("CZ29", r"(x0 <-2 u1) . y0=x0 . (u1 ->3 y0+y0 <-2 u1)"),
    ("CZ30", r"(u0 ->2 x1) . y0= u0 ->2 (x1 . y0+y0 . x1)"),
    ("CZ31", r"om2(u0, u1) . x0+ (u0 *2 u1) ->3 x0= u0 ->2 (u1 ->3 x0+x0 <-2 u1)"),
    ("CZ32", r"(x0 . x1) <-3 u0=x0 . (x1 <-3 u0+u0 ->2 x1)"),
    ("CZ33", r"(x0 <-2 u1) <-3 v0=x0 . ( om3(u1, v0)+ om2(v0, u1))+ x0 <-2 (u1 *3 v0+v0 *2 u1)"),
    ("CZ34", r"(u0 ->2 x1) <-3 v0= u0 ->2 (x1 <-3 v0+v0 ->2 x1)"),
    ("CZ35", r"om2(u0, u1) <-3 v0+ om3(u0 *2 u1, v0)=u0 ->2 ( om3(u1, v0)+ om2(v0, u1))+ om2(u0, u1 *3 v0+ v0 *2 u1)"),
    ("CZ36", r"(x1 <-3 u0) . y1=x1 . (u0 ->2 y1+y1 <-3 u0)"),
    ("CZ37", r"(u1 ->3 x0) . x1=u1 ->1 (x0 . x1+x1 . x0)"),
    ("CZ38", r"om3(u1, u0) . x1+ (u1 *3 u0) ->1 x1=u1 ->1 (u0 ->2 x1+x1 <-3 u0)"),
    ("CZ39", r"(x1 . x0) <-1 u1=x1 . (x0 <-2 u1+u1 ->3 x0)"),
    ("CZ40", r"(x1 <-3 u0) <-1 u1=x1 . ( om2(u0, u1)+ om3(u1, u0)) + x1 <-1 (u0 *2 u1+u1 *3 u0)"),
    ("CZ41", r"(u1 ->3 x0) <-1 v1=u1 ->1 (x0 <-2 v1+v1 ->3 x0)"),
    ("CZ42", r"om3(u1, u0) <-1 v1+ om1(u1 *3 u0, v1)=u1 ->1 ( om2(u0, v1) + om3(v1, u0)) + om1(u1, u0 *2 v1+v1 *3 u0)"),
    ("CZ43", r"(x1 <-1 u1) . x0=x1 . (u1 ->3 x0+x0 <-2 u1)"),
    ("CZ44", r"(u1 ->1 x1) . x0 = u1 ->1 (x1 . x0+x0 . x1)"),
    ("CZ45", r"om1(u1, v1) . x0 + (u1 *1 v1) ->3 x0=u1 ->1 (v1 ->3 x0+x0 <-2 v1)"),
    ("CZ46", r"(x1 . y1) <-3 u0=x1 . (y1 <-3 u0+u0 ->2 y1)"),
    ("CZ47", r"(x1 <-1 u1) <-3 u0=x1 . ( om3(u1, u0)+ om2(u0, u1))+ x1 <-1 (u1 *3 u0+u0 *2 u1)"),
    ("CZ48", r"(u1 ->1 x1) <-3 u0 = u1 ->1 (x1 <-3 u0+u0 ->2 x1)"),
    ("CZ49", r"om1(u1, v1) <-3 u0+ om3(u1 *1 v1, u0)=u1 ->1 ( om3(v1, u0)+ om2(u0, v1)) + om1(u1,v1 *3 u0+ u0 *2 v1)"),
    ("CZ50", r"phi(x0 <-2 u1)=x0 . sig(u1) + x0 <-0 d(u1)"),
    ("CZ51", r"phi(u0 ->2 x1)=u0 ->0 phi(x1)"),
    ("CZ52", r"phi om2(u0, u1) + sig(u0 *2 u1)=u0 ->0 sig(u1) + om0(u0, d(u1))"),
    ("CZ53", r"phi(x1 <-3 u0)= phi(x1) <-0 u0"),
    ("CZ54", r"phi(u1 ->3 x0)= sig(u1) . x0+ d(u1) ->0 x0"),
    ("CZ55", r"phi om3(u1, u0) + sig(u1 *3 u0)= sig(u1) <-0 u0+ om0(d(u1), u0)"),
    ("CZ56", r"sig(u1) . x1+ d(u1) ->2 x1=u1 ->1 x1"),
    ("CZ57", r"phi(x1) <-2 u1=x1 <-1 u1"),
    ("CZ58", r"sig(u1) <-2 v1 + om2(d(u1), v1)= om1(u1, v1)"),
    ("CZ59", r"x1 . sig(u1)+x1 <-3 d(u1)=x1 <-1 u1"),
    ("CZ60", r"u1 ->3 phi(x1)=u1 ->1 x1"),
    ("CZ61", r"u1 ->3 sig(v1) + om3(u1, d(v1))= om1(u1, v1)"),
];

pub(crate) const BZ_LIST: &[(&str, &str)] = &[
    ("BZ1", r"( xi . yi ) |>i wi=xi |>i ( yi |>i wi+wi <|i yi) ; (xi |>i vi) <|i zi=xi |>i (vi <|i zi+ zi |>i vi) ; (ui <|i yi) <|i zi=ui <|i (yi . zi+ zi . yi)"),
    ("BZ2", r"(xi <-i vi) . yi+(xi |>i vi) ->i yi =xi . (vi ->i yi+yi <-i vi)+xi <-i ( vi <|i yi + yi |>i vi)"),
    ("BZ3", r"(ui ->i xi) . yi +( ui <|i xi ) ->i yi = ui ->i ( xi . yi + yi . xi )"),
    ("BZ4", r"(ui *i vi ) ->i xi = ui ->i ( vi ->i xi + xi <-i vi)"),
    ("BZ5", r"(ui *i vi) <|i xi = ui <|i ( vi ->i xi+xi <-i vi)+ui *i ( vi <|i xi + xi |>i vi )"),
    ("BZ6", r"( xi . yi ) <-i wi = xi . (yi <-i wi+wi ->i yi)+xi <-i (yi |>i wi+wi <|i yi)"),
    ("BZ7", r"( xi <-i vi) <-i wi =xi <-i (vi *i wi +wi *i vi )"),
    ("BZ8", r"(xi <-i vi) |>i wi+(xi |>i vi) *i wi = xi |>i ( vi *i wi+wi *i vi )"),
    ("BZ9", r"( ui ->i xi) <-i wi = ui ->i ( xi <-i wi+wi ->i xi )"),
    ("BZ10", r"(ui ->i xi) |>i wi+ (ui <|i xi) *i wi = ui <|i (xi <-i wi + wi ->i xi )+ui *i (xi |>i wi + wi <|i xi)"),
    ("BZ11", r"(x0 . x1) <-1 u1=x0 . (x1 <-1 u1+u1 ->1 x1)+ x0 <-2 (x1 |>1 u1+u1 <|1 x1)"),
    ("BZ12", r"(x0 <-2 u1) . x1 + ( x0 |>2 u1) ->1 x1=x0 . (u1 ->1 x1+x1 <-1 u1)+ x0 <-2 (u1 <|1 x1+x1 |>1 u1)"),
    ("BZ13", r"(x0 <-2 u1) <-1 v1 =x0 <-2 (u1 *1 v1+v1 *1 u1)"),
    ("BZ14", r"(u0 ->2 x1) . y1 + (u0 <|2 x1) ->1 y1=u0 ->2 ( x1 . y1+y1 . x1)"),
    ("BZ15", r"(u0 ->2 x1) <-1 u1=u0 ->2 (x1 <-1 u1+u1 ->1 x1)"),
    ("BZ16", r"(u0 *2 u1) ->1 x1=u0 ->2 (u1 ->1 x1+x1 <-1 u1)"),
    ("BZ17", r"(x0 . x1) |>1 u1=x0 |>2 (x1 |>1 u1+u1 <|1 x1)"),
    ("BZ18", r"( x0 |>2 u1) <|1 y1 =x0 |>2 (u1 <|1 y1+y1 |>1 u1)"),
    ("BZ19", r"(x0 <-2 u1) |>1 v1+( x0 |>2 u1) *1 v1=x0 |>2 (u1 *1 v1+v1 *1 u1)"),
    ("BZ20", r"(u0 <|2 x1) <|1 y1=u0 <|2 (x1 . y1+y1 . x1)"),
    ("BZ21", r"(u0 ->2 x1) |>1 u1 + (u0 <|2 x1) *1 u1=u0 <|2 (x1 <-1 u1+u1 ->1 x1) + u0 *2 (x1 |>1 u1+u1 <|1 x1)"),
    ("BZ22", r"(u0 *2 u1) <|1 x1=u0 <|2 (u1 ->1 x1+x1 <-1 u1) + u0 *2 (u1 <|1 x1+x1 |>1 u1)"),
    ("BZ23", r"(x0 <-0 u0) . x1+ (x0 |>0 u0) ->2 x1=x0 . (u0 ->2 x1+x1 <-3 u0)+ x0 <-2 (u0 <|2 x1+x1 |>3 u0)"),
    ("BZ24", r"(u0 ->0 x0) . x1+ (u0 <|0 x0) ->2 x1=u0 ->2 (x0 . x1+x1 . x0)"),
    ("BZ25", r"(u0 *0 v0) ->2 x1= u0 ->2 (v0 ->2 x1+x1 <-3 v0)"),
    ("BZ26", r"(x0 . y0) <-2 u1=x0 . (y0 <-2 u1+u1 ->3 y0)+x0 <-2 (y0 |>2 u1+u1 <|3 y0)"),
    ("BZ27", r"(x0 <-0 u0) <-2 u1=x0 <-2 (u0 *2 u1+u1 *3 u0)"),
    ("BZ28", r"(u0 ->0 x0) <-2 u1= u0 ->2 (x0 <-2 u1+u1 ->3 x0)"),
    ("BZ29", r"(x0 . y0) |>2 u1=x0 |>2 (y0 |>2 u1+u1 <|3 y0)"),
    ("BZ30", r"(x0 <-0 u0) |>2 u1 + (x0 |>0 u0) *2 u1=x0 |>2 (u0 *2 u1+u1 *3 u0)"),
    ("BZ31", r"(u0 ->0 x0) |>2 u1+ (u0 <|0 x0) *2 u1=u0 <|2 (x0 <-2 u1+u1 ->3 x0)+ u0 *2 (x0 |>2 u1+u1 <|3 x0)"),
    ("BZ32", r"(x0 |>0 u0) <|2 x1=x0 |>2 (u0 <|2 x1+ x1 |>3 u0)"),
    ("BZ33", r"(u0 <|0 x0) <|2 x1=u0 <|2 (x0 . x1+x1 . x0)"),
    ("BZ34", r"(u0 *0 v0) <|2 x1=u0 <|2 (v0 ->2 x1+x1 <-3 v0)+ u0 *2 (v0 <|2 x1+x1 |>3 v0)"),
    ("BZ35", r"(x1 <-3 u0) . x0+ (x1 |>3 u0) ->3 x0=x1 . (u0 ->0 x0+x0 <-0 u0) + x1 <-3 (u0 <|0 x0+x0 |>0 u0)"),
    ("BZ36", r"(u1 ->3 x0) . y0 + (u1 <|3 x0) ->3 y0=u1 ->3 (x0 . y0+y0 . x0)"),
    ("BZ37", r"(u1 *3 u0) ->3 x0=u1 ->3 (u0 ->0 x0+x0 <-0 u0)"),
    ("BZ38", r"(x1 . x0) <-3 u0=x1 . (x0 <-0 u0+u0 ->0 x0) + x1 <-3 (x0 |>0 u0+u0 <|0 x0)"),
    ("BZ39", r"(x1 <-3 u0) <-3 v0=x1 <-3 (u0 *0 v0+v0 *0 u0)"),
    ("BZ40", r"(u1 ->3 x0) <-3 u0 =u1 ->3 (x0 <-0 u0+u0 ->0 x0)"),
    ("BZ41", r"(x1 . x0) |>3 u0=x1 |>3 (x0 |>0 u0+u0 <|0 x0)"),
    ("BZ42", r"(x1 <-3 u0) |>3 v0+ (x1 |>3 u0) *3 v0=x1 |>3 (u0 *0 v0+v0 *0 u0)"),
    ("BZ43", r"(u1 ->3 x0) |>3 u0+ (u1 <|3 x0) *3 u0=u1 <|3 (x0 <-0 u0+u0 ->0 x0)+ u1 *3 (x0 |>0 u0+u0 <|0 x0)"),
    ("BZ44", r"(x1 |>3 u0) <|3 x0=x1 |>3 (u0 <|0 x0+x0 |>0 u0)"),
    ("BZ45", r"(u1 <|3 x0) <|3 y0=u1 <|3 (x0 . y0+y0 . x0)"),
    ("BZ46", r"(u1 *3 u0) <|3 x0=u1 <|3 (u0 ->0 x0+x0 <-0 u0)+ u1 *3 (u0 <|0 x0+x0 |>0 u0)"),
    ("BZ47", r"(x0 <-2 u1) . y0+ (x0 |>2 u1) ->3 y0=x0 . (u1 ->3 y0+y0 <-2 u1)+ x0 <-2 (u1 <|3 y0+y0 |>2 u1)"),
    ("BZ48", r"(u0 ->2 x1) . y0+ (u0 <|2 x1) ->3 y0= u0 ->2 (x1 . y0+y0 . x1)"),
    ("BZ49", r"(u0 *2 u1) ->3 x0= u0 ->2 (u1 ->3 x0+x0 <-2 u1)"),
    ("BZ50", r"(x0 . x1) <-3 u0=x0 . (x1 <-3 u0+u0 ->2 x1)+ x0 <-2 (x1 |>3 u0+u0 <|2 x1)"),
    ("BZ51", r"(x0 <-2 u1) <-3 v0=x0 <-2 (u1 *3 v0+v0 *2 u1)"),
    ("BZ52", r"(u0 ->2 x1) <-3 v0= u0 ->2 (x1 <-3 v0+v0 ->2 x1)"),
    ("BZ53", r"(x0 . x1) |>3 u0=x0 |>2 (x1 |>3 u0+u0 <|2 x1)"),
    ("BZ54", r"(x0 <-2 u1) |>3 v0+ (x0 |>2 u1) *3 v0=x0 |>2 (u1 *3 v0+v0 *2 u1)"),
    ("BZ55", r"(u0 ->2 x1) |>3 v0+ (u0 <|2 x1) *3 v0=u0 <|2 (x1 <-3 v0+v0 ->2 x1)+ u0 *2 (x1 |>3 v0+v0 <|2 x1)"),
    ("BZ56", r"(x0 |>2 u1) <|3 y0=x0 |>2 (u1 <|3 y0+y0 |>2 u1)"),
    ("BZ57", r"(u0 <|2 x1) <|3 y0=u0 <|2 (x1 . y0+y0 . x1)"),
    ("BZ58", r"(u0 *2 u1) <|3 y0=u0 <|2 (u1 ->3 y0+y0 <-2 u1)+ u0 *2 (u1 <|3 y0+y0 |>2 u1)"),
    ("BZ59", r"(x1 <-3 u0) . y1+ (x1 |>3 u0) ->1 y1=x1 . (u0 ->2 y1+y1 <-3 u0)+ x1 <-1 (u0 <|2 y1+y1 |>3 u0)"),
    ("BZ60", r"(u1 ->3 x0) . x1 + (u1 <|3 x0) ->1 x1=u1 ->1 (x0 . x1+x1 . x0)"),
    ("BZ61", r"(u1 *3 u0) ->1 x1=u1 ->1 (u0 ->2 x1+x1 <-3 u0)"),
    ("BZ62", r"(x1 . x0) <-1 u1=x1 . (x0 <-2 u1+u1 ->3 x0)+x1 <-1 (x0 |>2 u1+u1 <|3 x0)"),
    ("BZ63", r"(x1 <-3 u0) <-1 u1=x1 <-1 (u0 *2 u1+u1 *3 u0)"),
    ("BZ64", r"(u1 ->3 x0) <-1 v1 =u1 ->1 (x0 <-2 v1+v1 ->3 x0)"),
    ("BZ65", r"(x1 . x0) |>1 u1=x1 |>1 (x0 |>2 u1+u1 <|3 x0)"),
    ("BZ66", r"(x1 <-3 u0) |>1 u1+ (x1 |>3 u0) *1 u1=x1 |>1 (u0 *2 u1+u1 *3 u0)"),
    ("BZ67", r"(u1 ->3 x0) |>1 v1 + (u1 <|3 x0) *1 v1=u1 <|1 (x0 <-2 v1+v1 ->3 x0)+ u1 *1 (x0 |>2 v1+v1 <|3 x0)"),
    ("BZ68", r"(x1 |>3 u0) <|1 y1=x1 |>1 (u0 <|2 y1+y1 |>3 u0)"),
    ("BZ69", r"(u1 <|3 x0) <|1 x1=u1 <|1 (x0 . x1+x1 . x0)"),
    ("BZ70", r"(u1 *3 u0) <|1 x1=u1 <|1 (u0 ->2 x1+x1 <-3 u0)+ u1 *1 (u0 <|2 x1+x1 |>3 u0)"),
    ("BZ71", r"(x1 <-1 u1) . x0+ (x1 |>1 u1) ->3 x0=x1 . (u1 ->3 x0+x0 <-2 u1)+ x1 <-1 (u1 <|3 x0+x0 |>2 u1)"),
    ("BZ72", r"(u1 ->1 x1) . x0 + (u1 <|1 x1) ->3 x0= u1 ->1 (x1 . x0+x0 . x1)"),
    ("BZ73", r"(u1 *1 v1) ->3 x0=u1 ->1 (v1 ->3 x0+x0 <-2 v1)"),
    ("BZ74", r"(x1 . y1) <-3 u0=x1 . (y1 <-3 u0+u0 ->2 y1)+ x1 <-1 (y1 |>3 u0+u0 <|2 y1)"),
    ("BZ75", r"(x1 <-1 u1) <-3 u0=x1 <-1 (u1 *3 u0+u0 *2 u1)"),
    ("BZ76", r"(u1 ->1 x1) <-3 u0 = u1 ->1 (x1 <-3 u0+u0 ->2 x1)"),
    ("BZ77", r"(x1 . y1) |>3 u0=x1 |>1 (y1 |>3 u0+u0 <|2 y1)"),
    ("BZ78", r"(x1 <-1 u1) |>3 u0+ (x1 |>1 u1) *3 u0=x1 |>1 (u1 *3 u0+u0 *2 u1)"),
    ("BZ79", r"(u1 ->1 x1) |>3 u0 + (u1 <|1 x1) *3 u0=u1 <|1 (x1 <-3 u0+u0 ->2 x1)+ u1 *1 (x1 |>3 u0+u0 <|2 x1)"),
    ("BZ80", r"(x1 |>1 u1) <|3 x0=x1 |>1 (u1 <|3 x0+x0 |>2 u1)"),
    ("BZ81", r"(u1 <|1 x1) <|3 x0=u1 <|1 (x1 . x0+x0 . x1)"),
    ("BZ82", r"(u1 *1 v1) <|3 x0=u1 <|1 (v1 ->3 x0+x0 <-2 v1)+ u1 *1 (v1 <|3 x0+x0 |>2 v1)"),
    ("BZ83", r"phi(x0 <-2 u1)+ sig(x0 |>2 u1)=x0 . sig(u1) + x0 <-0 d(u1)"),
    ("BZ84", r"phi(u0 ->2 x1)+ sig(u0 <|2 x1)=u0 ->0 phi(x1)"),
    ("BZ85", r"sig(u0 *2 u1)=u0 ->0 sig(u1)"),
    ("BZ86", r"d(x0 |>2 u1)=x0 |>0 d(u1)"),
    ("BZ87", r"d(u0 <|2 x1)= u0 <|0 phi(x1)"),
    ("BZ88", r"d(u0 *2 u1)= u0 <|0 sig(u1) + u0 *0 d(u1)"),
    ("BZ89", r"phi(x1 <-3 u0)+ sig(x1 |>3 u0)= phi(x1) <-0 u0"),
    ("BZ90", r"phi(u1 ->3 x0) + sig(u1 <|3 x0)= sig(u1) . x0+ d(u1) ->0 x0"),
    ("BZ91", r"sig(u1 *3 u0)= sig(u1) <-0 u0"),
    ("BZ92", r"d(x1 |>3 u0)= phi(x1) |>0 u0"),
    ("BZ93", r"d(u1 <|3 x0) =d(u1) <|0 x0"),
    ("BZ94", r"d(u1 *3 u0))= sig(u1) |>0 u0 + d(u1) *0 u0"),
    ("BZ95", r"sig(u1) . x1+ d(u1) ->2 x1=u1 ->1 x1"),
    ("BZ96", r"phi(x1) <-2 u1=x1 <-1 u1"),
    ("BZ97", r"sig(u1) <-2 v1=0"),
    ("BZ98", r"phi(x1) |>2 u1=x1 |>1 u1"),
    ("BZ99", r"sig(u1) |>2 v1 + d(u1) *2 v1=u1 *1 v1"),
    ("BZ100", r"d(u1) <|2 x1 =u1 <|1 x1"),
    ("BZ101", r"x1 . sig(u1)+x1 <-3 d(u1)=x1 <-1 u1"),
    ("BZ102", r"u1 ->3 phi(x1)=u1 ->1 x1"),
    ("BZ103", r"u1 ->3 sig(v1) = 0"),
    ("BZ104", r"x1 |>3 d(u1)=x1 |>1 u1"),
    ("BZ105", r"u1 <|3 phi(x1)=u1 <|1 x1"),
    ("BZ106", r"u1 <|3 sig(v1) + u1 *3 d(v1)=u1 *1 v1"),
];

pub(crate) const H_LIST: &[(&str, &str)] = &[
    ("H1", r"xi <-i vi+ri(xi |>i vi)=xi .' ri(vi)+ xi <-'i si(vi)"),
    ("H2", r"ui ->i yi+ ri(ui <|i yi)=ri(ui) .' yi+ si(ui) ->'i yi"),
    ("H3", r"omi(ui, vi)+ ri(ui *i vi)=ri(ui) .' ri(vi)+ri(ui) <-'i si(vi)+si(ui) ->'i ri(vi)+ om'i(si(ui), si(vi))"),
    ("H4", r"si(xi |>i vi)=xi |>'i si(vi)"),
    ("H5", r"si(ui <|i yi)=si(ui) <|'i yi"),
    ("H6", r"si(ui *i vi))=ri(ui) |>'i si(vi)+si(ui) <|'i ri(vi)+ si(ui) *'i si(vi)"),
    ("H7", r"phi(r1(u1))+ sig'(x1)+ sig' r1(u1)= sig(u1)+r0 d(u1)"),
    ("H8", r"d s1(u1)=s0 d(u1)"),
    ("H9", r"x0 <-2 u1+r1(x0 |>2 u1)-x0 .' r1(u1)-x0 <-'2 s1(u1)=0"),
    ("H10", r"u0 ->2 x1+ r1(u0 <|2 x1)-r0(u0) .' x1-s0(u0) ->'2 x1=0"),
    ("H11", r"om2(u0, u1)+ r1(u0 *2 u1)-r0(u0) .' r1(u1)-r0(u0) <-'2 s1(u1)-s0(u0) ->'2 r1(u1)- om'2(s0(u0), s1(u1))=0"),
    ("H12", r"s1(x0 |>2 u1)-x0 |>'2 s1(u1)=0"),
    ("H13", r"s1(u0 <|2 x1)-s0(u0) <|'2 x1=0"),
    ("H14", r"s1(u0 *2 u1))-r0(u0) |>'2 s1(u1)-s0(u0) <|'2 r1(u1) -s0(u0) *'2 s1(u1)=0"),
    ("H15", r"x1 <-3 u0+r1(x1 |>3 u0)=x1 .' r0(u0) + x1 <-'3 s0(u0)"),
    ("H16", r"u1 ->3 x0 + r1(u1 <|3 x0)=r1(u1) .' x0+ s1(u1) ->'3 x0"),
    ("H17", r"om3(u1, u0) + r1(u1 *3 u0)=r1(u1) .' r0(u0)+r1(u1) <-'3 s0(u0)+s1(u1) ->'3 r0(u0) + om'3(s1(u1), s0(u0))"),
    ("H18", r"s1(x1 |>3 u0)=x1 |>'3 s0(u0)"),
    ("H19", r"s1(u1 <|3 x0)=s1(u1) <|'3 x0"),
    ("H20", r"s1(u1 *3 u0))=r1(u1) |>'3 s0(u0)+s1(u1) <|'3 r0(u0) + s1(u1) *'3 s0(u0)"),
];

