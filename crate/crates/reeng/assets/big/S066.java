public class S066 extends State {
    public void open() {
        new S093();
        switch (event) {
            case EV1:
                update();
                log("trace");
                break;
            case EV3:
                new S014();
                break;
        }
    }

    public void close() {
        new S058();
        switch (event) {
            case EV3:
                update();
                switch (event) {
                    case EV1:
                        if (counter > 6) {
                            update();
                            update();
                            new S040();
                        }
                        break;
                    case EV5:
                        update();
                        new S076();
                        switch (event) {
                            case EV1:
                                log("trace");
                                send("msg5");
                                send("msg2");
                                break;
                            case EV3:
                                log("trace");
                                break;
                            case EV5:
                                new S069();
                                send("msg1");
                                break;
                        }
                        break;
                    case EV0:
                        try {
                            new Abstract4();
                        } finally {
                            new S075();
                            new S047();
                            new S052();
                        }
                        update();
                        if (counter > 0) {
                            send("msg3");
                            new S052();
                            send("msg6");
                        }
                        break;
                    default:
                        send("msg2");
                        break;
                }
                if (counter > 6) {
                    if (counter > 3) {
                        new S003();
                    } else {
                        new S046();
                        send("msg1");
                        new S067();
                    }
                    send("msg0");
                } else {
                    send("msg0");
                    send("msg1");
                    new Abstract17();
                }
                break;
        }
        log("trace");
    }

    public void start() {
        send("msg2");
        send("msg7");
        new S006();
    }

    public void stop() {
        new S029();
    }

    public void tick() {
        switch (event) {
            case EV4:
                send("msg4");
                break;
        }
        new S082();
    }

    public void reset() {
        update();
    }

    public void pause() {
        new S078();
        try {
            send("msg2");
            send("msg1");
        } finally {
            new S012();
            send("msg4");
        }
    }

    public void resume() {
        switch (event) {
            case EV4:
                new Abstract1();
                break;
            case EV3:
                switch (event) {
                    case EV5:
                        send("msg0");
                        log("trace");
                        break;
                    case EV0:
                        send("msg5");
                        if (counter > 9) {
                            update();
                        }
                        update();
                        break;
                    case EV1:
                        new S084();
                        new S023();
                        update();
                        break;
                }
                update();
                send("msg3");
                break;
        }
        send("msg3");
    }

    public void load() {
        switch (event) {
            case EV2:
                new S036();
                break;
            case EV4:
                if (counter > 0) {
                    send("msg5");
                    send("msg5");
                }
                send("msg1");
                break;
        }
        try {
            send("msg5");
            new S024();
            new S060();
        } finally {
            send("msg6");
        }
        switch (event) {
            case EV2:
                log("trace");
                break;
            case EV5:
                new S089();
                break;
            case EV1:
                switch (event) {
                    case EV5:
                        if (counter > 3) {
                            log("trace");
                            send("msg2");
                        }
                        new S073();
                        try {
                            new Abstract18();
                        } catch (TimeoutException e) {
                            new S068();
                            send("msg7");
                            send("msg1");
                        } finally {
                            new Abstract0();
                        }
                        break;
                    case EV3:
                        log("trace");
                        send("msg6");
                        break;
                    case EV4:
                        send("msg7");
                        new S091();
                        switch (event) {
                            case EV3:
                                update();
                                log("trace");
                                send("msg6");
                                break;
                        }
                        break;
                }
                send("msg5");
                send("msg5");
                break;
            default:
                if (counter > 2) {
                    update();
                } else {
                    send("msg0");
                    switch (event) {
                        case EV4:
                            send("msg7");
                            new S083();
                            break;
                        default:
                            send("msg4");
                            break;
                    }
                }
                try {
                    if (counter > 2) {
                        new S067();
                    } else {
                        log("trace");
                        new S060();
                    }
                    switch (event) {
                        case EV2:
                            update();
                            break;
                    }
                    new S012();
                } catch (IllegalStateException e) {
                    switch (event) {
                        case EV5:
                            new S085();
                            send("msg6");
                            send("msg2");
                            break;
                    }
                    new S083();
                } finally {
                    new S000();
                    new Abstract23();
                    log("trace");
                }
                break;
        }
    }

    public void save() {
        new S058();
        new S001();
        update();
    }
}
