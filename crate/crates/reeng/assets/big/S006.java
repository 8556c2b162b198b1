public class S006 extends Abstract18 {
    public void open() {
        new S082();
    }

    public void close() {
        send("msg4");
        try {
            new S069();
            switch (event) {
                case EV2:
                    send("msg6");
                    new S039();
                    switch (event) {
                        case EV1:
                            send("msg1");
                            new Abstract24();
                            new S092();
                            break;
                    }
                    break;
                case EV5:
                    log("trace");
                    new S018();
                    break;
                case EV4:
                    new S025();
                    log("trace");
                    try {
                        new S012();
                        new S079();
                        new S042();
                    } catch (IllegalStateException e) {
                        new S095();
                        new S095();
                        send("msg3");
                    }
                    break;
            }
        } catch (TimeoutException e) {
            new S078();
            new S036();
            new Abstract17();
        } catch (IllegalStateException e) {
            if (counter > 2) {
                switch (event) {
                    case EV2:
                        new S059();
                        send("msg2");
                        send("msg7");
                        break;
                }
            } else {
                if (counter > 3) {
                    new S079();
                    send("msg6");
                    new S048();
                }
            }
        }
        switch (event) {
            case EV1:
                update();
                break;
            case EV5:
                try {
                    update();
                } catch (IllegalStateException e) {
                    send("msg4");
                } finally {
                    if (counter > 3) {
                        send("msg7");
                    } else {
                        new S015();
                        send("msg4");
                    }
                    new Abstract6();
                }
                break;
            case EV3:
                if (counter > 7) {
                    update();
                    update();
                    if (counter > 5) {
                        new Abstract3();
                        new S056();
                    } else {
                        new S056();
                        send("msg3");
                    }
                } else {
                    if (counter > 2) {
                        send("msg5");
                        new S028();
                    } else {
                        new S023();
                    }
                    send("msg7");
                    send("msg1");
                }
                new S096();
                switch (event) {
                    case EV4:
                        if (counter > 5) {
                            send("msg2");
                            send("msg3");
                        } else {
                            new Abstract19();
                            new S061();
                            new Abstract23();
                        }
                        break;
                }
                break;
        }
    }

    public void start() {
        send("msg2");
        if (counter > 4) {
            new S085();
            new S046();
        } else {
            send("msg3");
            switch (event) {
                case EV3:
                    if (counter > 8) {
                        new S064();
                        update();
                    } else {
                        send("msg3");
                        send("msg6");
                    }
                    send("msg5");
                    new S041();
                    break;
                case EV4:
                    if (counter > 5) {
                        send("msg0");
                        new S042();
                    }
                    new S079();
                    break;
                case EV1:
                    send("msg0");
                    send("msg0");
                    break;
            }
            send("msg1");
        }
    }

    public void stop() {
        new S094();
    }

    public void tick() {
        if (counter > 7) {
            send("msg4");
        }
        update();
    }

    public void reset() {
        switch (event) {
            case EV0:
                update();
                break;
            case EV2:
                new S047();
                break;
            case EV3:
                switch (event) {
                    case EV1:
                        send("msg0");
                        new S081();
                        break;
                }
                new S079();
                break;
        }
        update();
        send("msg7");
    }

    public void pause() {
        send("msg1");
        new S030();
        new S010();
    }

    public void resume() {
        send("msg7");
        if (counter > 0) {
            if (counter > 8) {
                try {
                    new S092();
                } catch (IOException e) {
                    send("msg4");
                    new S006();
                }
                log("trace");
                send("msg7");
            }
        } else {
            if (counter > 7) {
                switch (event) {
                    case EV3:
                        send("msg3");
                        break;
                    case EV5:
                        new Abstract13();
                        send("msg3");
                        update();
                        break;
                }
                log("trace");
            } else {
                switch (event) {
                    case EV1:
                        update();
                        break;
                    case EV2:
                        send("msg2");
                        send("msg6");
                        send("msg6");
                        break;
                }
                send("msg0");
            }
            new S044();
        }
    }

    public void load() {
        send("msg4");
        try {
            send("msg2");
            log("trace");
            log("trace");
        } catch (TimeoutException e) {
            switch (event) {
                case EV1:
                    update();
                    break;
                case EV4:
                    new S020();
                    send("msg2");
                    new Abstract24();
                    break;
                case EV3:
                    send("msg2");
                    update();
                    break;
            }
            new S047();
        }
    }

    public void save() {
        new S059();
        if (counter > 8) {
            if (counter > 7) {
                send("msg6");
            }
        }
        send("msg0");
    }
}
