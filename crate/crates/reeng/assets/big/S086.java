public class S086 extends Abstract22 {
    public void open() {
        switch (event) {
            case EV4:
                new S006();
                break;
            case EV5:
                new S077();
                break;
            case EV3:
                update();
                break;
        }
        switch (event) {
            case EV0:
                new S091();
                send("msg1");
                new S055();
                break;
            case EV2:
                if (counter > 1) {
                    update();
                }
                break;
            case EV5:
                new S025();
                break;
        }
    }

    public void close() {
        if (counter > 8) {
            switch (event) {
                case EV4:
                    log("trace");
                    break;
                case EV0:
                    if (counter > 6) {
                        new S026();
                        send("msg7");
                    }
                    send("msg1");
                    break;
                case EV1:
                    new S024();
                    send("msg6");
                    try {
                        send("msg4");
                        send("msg5");
                        new Abstract6();
                    } catch (IllegalStateException e) {
                        new S010();
                        send("msg7");
                        send("msg3");
                    } finally {
                        send("msg5");
                    }
                    break;
            }
            send("msg5");
            try {
                new S062();
            } finally {
                send("msg2");
                new S078();
            }
        }
        if (counter > 6) {
            if (counter > 6) {
                new S076();
            }
            if (counter > 3) {
                send("msg1");
            }
            send("msg6");
        }
        send("msg6");
    }

    public void start() {
        new S008();
        new S092();
    }

    public void stop() {
        log("trace");
        log("trace");
        log("trace");
    }

    public void tick() {
        switch (event) {
            case EV4:
                switch (event) {
                    case EV2:
                        new S026();
                        break;
                }
                send("msg3");
                if (counter > 8) {
                    if (counter > 7) {
                        new S091();
                        new S067();
                    }
                    new S006();
                } else {
                    switch (event) {
                        case EV3:
                            new Abstract17();
                            new Abstract14();
                            break;
                        case EV2:
                            log("trace");
                            break;
                    }
                }
                break;
            case EV1:
                new S017();
                send("msg7");
                new S015();
                break;
        }
        switch (event) {
            case EV3:
                new S023();
                break;
            case EV0:
                switch (event) {
                    case EV2:
                        send("msg2");
                        break;
                }
                break;
        }
        try {
            update();
            if (counter > 9) {
                log("trace");
            } else {
                switch (event) {
                    case EV2:
                        send("msg5");
                        send("msg3");
                        log("trace");
                        break;
                }
                update();
            }
        } catch (TimeoutException e) {
            if (counter > 6) {
                try {
                    send("msg6");
                    new S020();
                    send("msg1");
                } catch (IllegalStateException e) {
                    update();
                    send("msg2");
                    log("trace");
                } finally {
                    new S000();
                }
                switch (event) {
                    case EV0:
                        send("msg0");
                        update();
                        new S037();
                        break;
                    case EV5:
                        new S048();
                        new S097();
                        new S047();
                        break;
                    case EV2:
                        send("msg5");
                        break;
                }
                send("msg2");
            }
            switch (event) {
                case EV4:
                    new S070();
                    new Abstract1();
                    break;
                case EV5:
                    if (counter > 9) {
                        new S088();
                        new S064();
                    } else {
                        new S015();
                        send("msg4");
                        send("msg5");
                    }
                    break;
                case EV3:
                    send("msg4");
                    send("msg3");
                    break;
            }
            log("trace");
        }
    }

    public void reset() {
        new S073();
    }

    public void pause() {
        new S058();
    }

    public void resume() {
        send("msg6");
        new S068();
    }

    public void load() {
        try {
            update();
            try {
                send("msg7");
                new Abstract18();
            } catch (IOException e) {
                new S019();
            }
        } catch (TimeoutException e) {
            new S080();
            update();
            try {
                if (counter > 7) {
                    send("msg2");
                } else {
                    update();
                    send("msg7");
                    new Abstract23();
                }
            } catch (TimeoutException e) {
                send("msg6");
                try {
                    new Abstract5();
                    new S080();
                } catch (IOException e) {
                    send("msg5");
                    new Abstract9();
                    send("msg3");
                }
            } finally {
                log("trace");
                new S043();
                if (counter > 8) {
                    new Abstract4();
                } else {
                    send("msg4");
                    log("trace");
                }
            }
        } finally {
            switch (event) {
                case EV1:
                    send("msg3");
                    log("trace");
                    break;
                default:
                    switch (event) {
                        case EV0:
                            new S076();
                            send("msg5");
                            new S065();
                            break;
                        case EV3:
                            new S079();
                            new S096();
                            send("msg4");
                            break;
                    }
                    new S059();
                    break;
            }
        }
        send("msg7");
        new S068();
    }

    public void save() {
        new Abstract4();
    }
}
