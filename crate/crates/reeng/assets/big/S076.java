public class S076 extends State {
    public void open() {
        new S045();
    }

    public void close() {
        send("msg4");
        switch (event) {
            case EV5:
                send("msg1");
                break;
            case EV0:
                new S046();
                send("msg2");
                break;
            case EV3:
                new S033();
                switch (event) {
                    case EV4:
                        update();
                        if (counter > 9) {
                            new S030();
                            send("msg1");
                            new S023();
                        }
                        new S034();
                        break;
                    case EV5:
                        send("msg0");
                        send("msg4");
                        new S011();
                        break;
                }
                update();
                break;
        }
    }

    public void start() {
        try {
            new S076();
        } catch (IllegalStateException e) {
            send("msg3");
            new S030();
            if (counter > 7) {
                new S087();
                new S073();
            }
        } finally {
            if (counter > 7) {
                try {
                    send("msg2");
                } finally {
                    new S026();
                    new S061();
                    send("msg7");
                }
                if (counter > 2) {
                    send("msg2");
                }
                new S001();
            } else {
                new S044();
            }
            send("msg0");
            new S031();
        }
    }

    public void stop() {
        try {
            try {
                try {
                    send("msg2");
                    send("msg7");
                } catch (IOException e) {
                    new S099();
                    new Abstract23();
                    log("trace");
                } finally {
                    log("trace");
                    send("msg7");
                    send("msg0");
                }
                new S059();
            } catch (TimeoutException e) {
                try {
                    send("msg0");
                } catch (TimeoutException e) {
                    new S009();
                }
            }
            send("msg7");
            new S098();
        } catch (IllegalStateException e) {
            if (counter > 9) {
                new S085();
            }
            try {
                if (counter > 5) {
                    send("msg6");
                    new S038();
                    new S052();
                }
                new S020();
                send("msg5");
            } catch (IllegalStateException e) {
                log("trace");
            } catch (TimeoutException e) {
                send("msg0");
                switch (event) {
                    case EV2:
                        send("msg3");
                        break;
                    case EV0:
                        send("msg6");
                        break;
                    default:
                        new S013();
                        send("msg0");
                        break;
                }
            } finally {
                try {
                    send("msg7");
                    log("trace");
                } catch (IllegalStateException e) {
                    new S054();
                } catch (IOException e) {
                    new S094();
                    new Abstract14();
                    send("msg4");
                }
            }
            send("msg0");
        }
        new S031();
    }

    public void tick() {
        new S063();
        try {
            send("msg6");
            log("trace");
        } catch (IOException e) {
            send("msg6");
            new S035();
        } catch (IllegalStateException e) {
            send("msg3");
            if (counter > 9) {
                try {
                    send("msg2");
                } catch (IOException e) {
                    send("msg3");
                }
                send("msg7");
            } else {
                switch (event) {
                    case EV3:
                        send("msg6");
                        new S085();
                        log("trace");
                        break;
                    case EV2:
                        update();
                        new S032();
                        break;
                    case EV4:
                        send("msg7");
                        log("trace");
                        break;
                    default:
                        send("msg6");
                        new S012();
                        send("msg1");
                        break;
                }
            }
            new S039();
        } finally {
            new S075();
            send("msg7");
        }
    }

    public void reset() {
        send("msg5");
        update();
    }

    public void pause() {
        update();
    }

    public void resume() {
        new S032();
        try {
            send("msg4");
        } finally {
            if (counter > 8) {
                send("msg4");
            }
            new S058();
        }
        new S039();
    }

    public void load() {
        if (counter > 4) {
            send("msg3");
            log("trace");
            new S094();
        } else {
            new S097();
        }
        new S021();
        new Helper();
    }

    public void save() {
        new S018();
        switch (event) {
            case EV5:
                update();
                new S072();
                break;
            case EV3:
                log("trace");
                new S015();
                if (counter > 6) {
                    switch (event) {
                        case EV3:
                            send("msg4");
                            send("msg5");
                            new S000();
                            break;
                        case EV1:
                            new S032();
                            new S056();
                            break;
                        case EV0:
                            send("msg7");
                            send("msg7");
                            new S048();
                            break;
                    }
                    switch (event) {
                        case EV2:
                            new Abstract18();
                            log("trace");
                            break;
                        case EV3:
                            new S086();
                            break;
                        case EV4:
                            new S037();
                            break;
                    }
                } else {
                    send("msg0");
                }
                break;
        }
        send("msg7");
    }
}
