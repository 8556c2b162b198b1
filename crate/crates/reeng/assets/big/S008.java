public class S008 extends Abstract22 {
    public void open() {
        switch (event) {
            case EV4:
                switch (event) {
                    case EV2:
                        send("msg7");
                        try {
                            new S011();
                            send("msg5");
                        } finally {
                            update();
                            send("msg4");
                            send("msg7");
                        }
                        break;
                }
                switch (event) {
                    case EV0:
                        new Abstract12();
                        if (counter > 1) {
                            new S006();
                        } else {
                            send("msg6");
                            log("trace");
                            new S046();
                        }
                        if (counter > 7) {
                            new S001();
                        }
                        break;
                    case EV5:
                        log("trace");
                        log("trace");
                        log("trace");
                        break;
                    case EV4:
                        new S052();
                        break;
                }
                break;
            case EV2:
                send("msg5");
                new S014();
                new S009();
                break;
        }
        send("msg6");
    }

    public void close() {
        send("msg4");
    }

    public void start() {
        send("msg6");
        new S098();
        new S076();
    }

    public void stop() {
        new S053();
        if (counter > 0) {
            switch (event) {
                case EV3:
                    update();
                    if (counter > 2) {
                        new Abstract17();
                    } else {
                        new S075();
                        new S043();
                    }
                    new S022();
                    break;
            }
            new S074();
            try {
                send("msg7");
                send("msg6");
                update();
            } finally {
                new Abstract5();
                new S024();
            }
        } else {
            update();
            send("msg1");
        }
    }

    public void tick() {
        send("msg4");
    }

    public void reset() {
        update();
        if (counter > 9) {
            switch (event) {
                case EV0:
                    try {
                        update();
                        new S086();
                    } catch (TimeoutException e) {
                        send("msg1");
                        update();
                    } finally {
                        send("msg1");
                        send("msg4");
                        new S082();
                    }
                    new S024();
                    try {
                        new S096();
                        new S082();
                    } catch (IOException e) {
                        new S061();
                        new S084();
                        send("msg0");
                    } catch (TimeoutException e) {
                        update();
                        send("msg5");
                        log("trace");
                    }
                    break;
                case EV2:
                    new Abstract18();
                    new S042();
                    break;
                case EV3:
                    new S023();
                    send("msg0");
                    switch (event) {
                        case EV3:
                            send("msg5");
                            update();
                            send("msg6");
                            break;
                    }
                    break;
            }
        } else {
            send("msg7");
        }
        switch (event) {
            case EV4:
                send("msg6");
                new S060();
                break;
        }
    }

    public void pause() {
        send("msg0");
        if (counter > 4) {
            send("msg2");
        }
    }

    public void resume() {
        send("msg2");
        switch (event) {
            case EV0:
                new S010();
                break;
        }
    }

    public void load() {
        switch (event) {
            case EV2:
                log("trace");
                switch (event) {
                    case EV1:
                        send("msg5");
                        new S080();
                        new S075();
                        break;
                    case EV5:
                        new S050();
                        send("msg4");
                        if (counter > 6) {
                            send("msg0");
                            update();
                            new S029();
                        }
                        break;
                    case EV3:
                        new S043();
                        break;
                }
                break;
            case EV5:
                if (counter > 7) {
                    new S009();
                    update();
                } else {
                    if (counter > 3) {
                        new S025();
                    } else {
                        send("msg0");
                        update();
                    }
                    try {
                        send("msg7");
                        log("trace");
                        log("trace");
                    } finally {
                        send("msg1");
                        send("msg1");
                    }
                    log("trace");
                }
                new S086();
                break;
        }
        switch (event) {
            case EV4:
                new S070();
                if (counter > 7) {
                    send("msg3");
                    try {
                        new Abstract23();
                        send("msg4");
                    } finally {
                        new S020();
                    }
                    try {
                        new S007();
                        new S071();
                        new S045();
                    } catch (IOException e) {
                        new S021();
                        new S068();
                        new S029();
                    } catch (TimeoutException e) {
                        send("msg1");
                        log("trace");
                    }
                }
                new S009();
                break;
            default:
                new S018();
                break;
        }
        send("msg6");
    }

    public void save() {
        new S029();
        switch (event) {
            case EV2:
                log("trace");
                break;
            default:
                new S070();
                break;
        }
        new S097();
    }
}
